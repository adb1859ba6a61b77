#pragma once

#include <span>
#include <vector>

#include "ordercone/linalg.hpp"

namespace ordercone {

/// Linear subspace of Q^n held by its canonical basis, so equality of
/// subspaces is equality of the stored bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(std::span<const VectorQ> vectors, std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// ker A, with ambient dimension cols(A).
  static Subspace kernel(const MatrixQ& a);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<VectorQ>& basis() const noexcept { return basis_; }

  bool contains(const VectorQ& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<VectorQ> basis_;
};

/// True iff dim(a) + dim(b) = n and a ∩ b = {0}.
bool is_direct_sum_decomposition(const Subspace& a, const Subspace& b);

}  // namespace ordercone
