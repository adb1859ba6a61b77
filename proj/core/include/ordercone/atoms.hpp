#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordercone/bands.hpp"
#include "ordercone/cone.hpp"

namespace ordercone {

enum class WeakStatus { Holds, Violated, NoViolationFound };

struct WeakPervasiveness {
  WeakStatus status = WeakStatus::NoViolationFound;
  /// For Violated: b, d > 0 with b, d not disjoint and [0,b] ∩ [0,d] = {0}.
  std::optional<std::pair<VectorQ, VectorQ>> certificate;
};

struct Classification {
  bool is_lattice = false;
  bool is_pervasive = false;
  bool is_fordable = false;
  WeakPervasiveness weakly_pervasive;
  bool has_rdp = false;
  std::size_t atom_count = 0;
};

struct AtomDecomposition {
  Rational lambda;
  VectorQ atom_part;       // lambda * a
  VectorQ disjoint_part;   // in {a}^d
};

struct ProjectionReport {
  Band band;
  bool is_projection_band = false;
  /// Projection onto the band along its disjoint complement, when it exists.
  std::optional<MatrixQ> matrix;
};

/// Extreme rays of the cone; up to positive scaling these are the atoms.
std::vector<VectorQ> atoms(const OrderedSpace& s);

bool is_atom(const OrderedSpace& s, const VectorQ& x);

/// x > 0 admits no pair of nonzero disjoint positive elements below it.
/// For every nonempty J inside supp(F x) one LP decides whether some nonzero
/// u with 0 <= u <= x has supp(F u) ⊆ J; the answer is monotone in J so
/// supersets of realizable sets are skipped. Throws Error(NotPositive) when
/// x is not > 0 and Error(CapExceeded) for supports above 20 coordinates.
bool is_discrete(const OrderedSpace& s, const VectorQ& x);

/// Lattice iff the cone is simplicial; pervasiveness and the Riesz
/// decomposition property coincide with the lattice property in finite
/// dimension. Weak pervasiveness is searched over pairs drawn from the
/// extreme rays and their pairwise sums.
Classification classify(const OrderedSpace& s);

/// Fordable: every singleton support {j} is the support of some F x.
bool is_fordable(const OrderedSpace& s);

struct PervasiveWitness {
  enum class Kind { Witness, NoWitness, Inapplicable };
  Kind kind = Kind::Inapplicable;
  std::optional<VectorQ> point;   // 0 < F point <= (F b) ∨ 0, for Witness
};

/// Looks for x with 0 < F x <= (F b) ∨ 0 by maximising the coordinate sum.
PervasiveWitness pervasive_witness_check(const OrderedSpace& s, const VectorQ& b);

/// Greatest μ with μ a <= x, by the closed form min_{f_j(a) > 0} f_j(x)/f_j(a),
/// cross-checked against atom_lambda_by_lp. Requires a pervasive space, an
/// atom a and x >= 0 (NotPervasive, NotAtom, NotPositive).
Rational atom_lambda(const OrderedSpace& s, const VectorQ& x, const VectorQ& a);

/// The same quantity as the optimum of max μ s.t. F(x - μ a) >= 0.
Rational atom_lambda_by_lp(const OrderedSpace& s, const VectorQ& x, const VectorQ& a);

/// x = α a + w with w ∈ {a}^d, when X = B_a ⊕ B_a^d and the solve succeeds.
/// Errors: NotAtom, NoDecomposition.
AtomDecomposition decompose_by_atom(const OrderedSpace& s, const VectorQ& x, const VectorQ& a);

/// Throws Error(NotABand) if `carrier` is not a band.
ProjectionReport is_projection_band(const OrderedSpace& s, const Subspace& carrier);

/// One report per projection band (each has a unique band projection).
std::vector<ProjectionReport> enumerate_order_projections(const OrderedSpace& s,
                                                          std::size_t cap = kDefaultBandCap);

struct RdpSplit {
  VectorQ first;    // 0 <= first <= x1
  VectorQ second;   // 0 <= second <= x2
};

/// Splits z = z1 + z2 with 0 <= z_i <= x_i if possible. Requires x1, x2, z
/// in the cone and z <= x1 + x2 (PreconditionViolated).
std::optional<RdpSplit> rdp_split(const OrderedSpace& s, const VectorQ& x1, const VectorQ& x2,
                                  const VectorQ& z);

/// D = Z(J) for its own maximal zero set J.
bool is_coordinate_ideal(const OrderedSpace& s, const Subspace& d);

/// Sampled search for y ∈ D and x ∉ D with {x,-x}^u ⊇ {y,-y}^u. Samples y
/// from the basis of D and their pairwise sums and differences, x from the
/// extreme rays and their pairwise differences.
std::optional<std::pair<VectorQ, VectorQ>> find_solidity_violation(const OrderedSpace& s,
                                                                   const Subspace& d);

struct IdealDecompositionVerdict {
  enum class Outcome { Confirmed, HypothesesNotMet };
  Outcome outcome = Outcome::HypothesesNotMet;
  std::string tier;               // which hypothesis set applied
  std::string failing_condition;  // for HypothesesNotMet
  bool complement_matches = false;   // D == B^d
  bool b_is_projection_band = false;
};

/// For X = B ⊕ D, checks whether D = B^d follows from the hypotheses
/// (pervasive with coordinate ideals, or weakly pervasive with directed
/// ideals) and verifies the conclusion when they hold. Throws
/// Error(NotDirectSum) if X ≠ B ⊕ D.
IdealDecompositionVerdict check_ideal_decomposition(const OrderedSpace& s, const Subspace& b,
                                                    const Subspace& d);

}  // namespace ordercone
