#pragma once

#include <vector>

#include "ordercone/linalg.hpp"
#include "ordercone/subspace.hpp"

namespace ordercone {

class OrderedSpace;

/// Facet-functional representation x ↦ F·x into Q^m with the coordinatewise
/// order. For a pointed generating polyhedral cone this is the vector
/// lattice cover used by every disjointness and band computation.
struct FunctionalRep {
  MatrixQ f;                                // m x n, one irredundant facet per row
  std::vector<VectorQ> range_relations;     // basis of the left kernel of f

  std::size_t m() const noexcept { return f.rows(); }
};

FunctionalRep make_functional_rep(MatrixQ f);

/// Coordinates of an element of the cover Q^m.
using CompletionElement = VectorQ;

CompletionElement embed(const OrderedSpace& s, const VectorQ& x);

/// True iff y lies in F(X), i.e. satisfies every range relation.
bool in_range(const OrderedSpace& s, const CompletionElement& y);

/// {z : F z >= |F y|} ⊆ {z : F z >= |F x|}, decided by one LP per coordinate.
/// This is the relation {x,-x}^u ⊇ {y,-y}^u used in the definition of solid sets.
bool modulus_dominates(const OrderedSpace& s, const VectorQ& x, const VectorQ& y);

/// Per-coordinate infima inf{f_j(x) : F x >= y}, one LP each. Every
/// coordinate is bounded below by y_j, and the feasible set is nonempty
/// because the cone is generating.
std::vector<Rational> coordinate_infima(const OrderedSpace& s, const CompletionElement& y);

/// True iff y is the infimum of the image points above it (m LPs).
bool order_density_at(const OrderedSpace& s, const CompletionElement& y);

/// Exists d ∈ D with f_j(d) >= 1 for j ∈ J and f_j(d) = 0 for j ∉ J.
bool is_majorizing(const OrderedSpace& s, const Subspace& d, const IndexSet& j);

}  // namespace ordercone
