#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordercone/completion.hpp"
#include "ordercone/linalg.hpp"
#include "ordercone/lp.hpp"

namespace ordercone {

/// A pointed generating polyhedral cone in both representations. Generators
/// are the primitive extreme rays; facets are the primitive irredundant
/// inward normals.
struct ConeSpec {
  std::size_t dim = 0;
  std::vector<VectorQ> generators;
  std::vector<VectorQ> facets;
};

/// Q^n ordered by a pointed generating polyhedral cone (hence Archimedean
/// and directed, hence pre-Riesz), together with its functional
/// representation. Instances are only produced by build_space.
class OrderedSpace {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return cone_.dim; }
  const ConeSpec& cone() const noexcept { return cone_; }
  const FunctionalRep& completion() const noexcept { return completion_; }
  const MatrixQ& functionals() const noexcept { return completion_.f; }
  std::size_t facet_count() const noexcept { return completion_.m(); }

 private:
  OrderedSpace(std::string name, ConeSpec cone, FunctionalRep completion)
      : name_(std::move(name)), cone_(std::move(cone)), completion_(std::move(completion)) {}

  friend OrderedSpace build_space(std::size_t, std::optional<std::vector<VectorQ>>,
                                  std::optional<std::vector<VectorQ>>, std::string);

  std::string name_;
  ConeSpec cone_;
  FunctionalRep completion_;
};

/// Builds a space from generators, facets, or both.
///
/// The missing representation is computed by double description and both
/// are reduced to irredundant primitive form. Supplied order is kept for
/// supplied representations; computed ones are sorted lexicographically.
/// When both are supplied they must describe the same cone.
///
/// Errors: EmptyInput, DimensionMismatch, NotPointed, NotGenerating,
/// InconsistentRepresentation.
OrderedSpace build_space(std::size_t dim, std::optional<std::vector<VectorQ>> generators,
                         std::optional<std::vector<VectorQ>> facets, std::string name);

/// Extreme rays of {x : A x >= 0} as primitive integer vectors, by double
/// description. Rows are inserted in order starting from the first maximal
/// independent subset; adjacency is decided by the rank of the common
/// active rows. Requires rank(A) = cols(A) (a pointed cone); throws
/// Error(NotPointed) otherwise.
std::vector<VectorQ> extreme_rays(const MatrixQ& a);

bool in_cone(const OrderedSpace& s, const VectorQ& x);

/// x <= y iff F(y - x) >= 0.
bool leq(const OrderedSpace& s, const VectorQ& x, const VectorQ& y);

/// M^u = {z : F z >= F m for all m ∈ M}, written as F z >= max_m F m.
Polyhedron upper_bound_polyhedron(const OrderedSpace& s, std::span<const VectorQ> m);

/// Least upper bound of M inside X, if it exists.
std::optional<VectorQ> sup_in_x(const OrderedSpace& s, std::span<const VectorQ> m);

/// Preimage under F, if y ∈ F(X).
std::optional<VectorQ> pull_back(const OrderedSpace& s, const CompletionElement& y);

}  // namespace ordercone
