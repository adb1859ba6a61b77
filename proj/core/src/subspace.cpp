#include "ordercone/subspace.hpp"

#include "ordercone/error.hpp"

namespace ordercone {

Subspace Subspace::span(std::span<const VectorQ> vectors, std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = canonical_basis(vectors, ambient_dim);
  return s;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  for (std::size_t i = 0; i < ambient_dim; ++i) s.basis_.push_back(unit_vector(ambient_dim, i));
  return s;
}

Subspace Subspace::kernel(const MatrixQ& a) {
  Subspace s;
  s.ambient_dim_ = a.cols();
  s.basis_ = nullspace(a);
  return s;
}

bool Subspace::contains(const VectorQ& v) const {
  if (v.size() != ambient_dim_) throw Error(Errc::DimensionMismatch, "vector outside ambient space");
  if (is_zero(v)) return true;
  std::vector<VectorQ> rows = basis_;
  rows.push_back(v);
  return rank(rows, ambient_dim_) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis()) {
    if (!contains(v)) return false;
  }
  return true;
}

bool is_direct_sum_decomposition(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::DimensionMismatch, "subspaces of different spaces");
  if (a.dim() + b.dim() != a.ambient_dim()) return false;
  std::vector<VectorQ> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return rank(all, a.ambient_dim()) == a.ambient_dim();
}

}  // namespace ordercone
