#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ordercone/cone.hpp"
#include "ordercone/subspace.hpp"

namespace ordercone {

inline constexpr std::size_t kDefaultBandCap = 14;

/// A band of X. `zero_set` is the maximal set of cover coordinates vanishing
/// on the carrier, so carrier = {x : f_j(x) = 0 for all j ∈ zero_set}.
struct Band {
  Subspace carrier;
  IndexSet zero_set;
  bool directed = false;

  friend bool operator==(const Band&, const Band&) = default;
};

/// Disjointness through the cover: F x and F y have disjoint supports.
bool is_disjoint(const OrderedSpace& s, const VectorQ& x, const VectorQ& y);

/// Disjointness from the definition: {x+y, -x-y}^u = {x-y, -x+y}^u, decided
/// by mutual inclusion of the two upper-bound polyhedra with per-coordinate
/// LPs. Shares no code path with is_disjoint.
bool disjoint_eq1_oracle(const OrderedSpace& s, const VectorQ& x, const VectorQ& y);

/// Coordinates f_j that vanish on every vector of `d` (the maximal zero set).
IndexSet zero_set_of(const OrderedSpace& s, const Subspace& d);

/// {x : f_j(x) = 0 for all j ∈ J}.
Subspace coordinate_kernel(const OrderedSpace& s, const IndexSet& j);

/// M^d. An empty M yields X.
Band disjoint_complement(const OrderedSpace& s, std::span<const VectorQ> m);
Band disjoint_complement(const OrderedSpace& s, const Subspace& d);

/// Principal band {a}^dd.
Band band_of(const OrderedSpace& s, const VectorQ& a);

/// D = D^dd.
bool is_band(const OrderedSpace& s, const Subspace& d);

/// Every band of X, by exhausting the 2^m coordinate kernels. Sorted by
/// dimension, then by canonical basis. Throws Error(CapExceeded) if m > cap.
std::vector<Band> enumerate_bands(const OrderedSpace& s, std::size_t cap = kDefaultBandCap);

/// x ∈ I_a: some λ > 0 has {λa,-λa}^u ⊆ {x,-x}^u.
bool principal_ideal_member(const OrderedSpace& s, const VectorQ& x, const VectorQ& a);

/// span(D ∩ K) = D.
bool is_directed_subspace(const OrderedSpace& s, const Subspace& d);

/// Support J of F(B); the smallest band of the cover containing i(B) is
/// {y : y_j = 0 for j ∉ J}.
IndexSet extend_band(const OrderedSpace& s, const Band& b);

/// Restriction of the cover band with support J: {x : f_j(x) = 0 for j ∉ J}.
Subspace restrict_band(const OrderedSpace& s, IndexSet j);

/// Band record for a subspace already known to be a band.
Band make_band(const OrderedSpace& s, Subspace carrier);

}  // namespace ordercone
