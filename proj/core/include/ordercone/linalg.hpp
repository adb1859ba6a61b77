#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ordercone/rational.hpp"

namespace ordercone {

using VectorQ = std::vector<Rational>;

/// Sorted, duplicate-free list of 0-based coordinate indices.
using IndexSet = std::vector<std::size_t>;

/// Dense row-major rational matrix. The column count is stored explicitly
/// so that matrices with zero rows still know their width.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols);

  /// Throws Error(DimensionMismatch) if any row has a length other than `cols`.
  static MatrixQ from_rows(std::vector<VectorQ> rows, std::size_t cols);
  /// Width taken from the first row; an empty list yields a 0x0 matrix.
  static MatrixQ from_rows(std::vector<VectorQ> rows);
  static MatrixQ identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  const VectorQ& row(std::size_t i) const { return rows_[i]; }
  std::span<const VectorQ> row_list() const noexcept { return rows_; }
  VectorQ column(std::size_t j) const;

  MatrixQ transpose() const;
  MatrixQ select_rows(std::span<const std::size_t> indices) const;
  MatrixQ drop_row(std::size_t index) const;

  VectorQ operator*(const VectorQ& x) const;
  MatrixQ operator*(const MatrixQ& other) const;

  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<VectorQ> rows_;
};

// Vector arithmetic. Named functions rather than operators: VectorQ is a
// std::vector, so operators declared here would not be found by ADL.
VectorQ zero_vector(std::size_t n);
VectorQ unit_vector(std::size_t n, std::size_t i);
VectorQ add(const VectorQ& a, const VectorQ& b);
VectorQ sub(const VectorQ& a, const VectorQ& b);
VectorQ scale(const Rational& t, const VectorQ& v);
VectorQ negate(const VectorQ& v);
Rational dot(const VectorQ& a, const VectorQ& b);
bool is_zero(const VectorQ& v);
bool is_nonnegative(const VectorQ& v);
VectorQ cw_max(const VectorQ& a, const VectorQ& b);
VectorQ cw_min(const VectorQ& a, const VectorQ& b);
VectorQ cw_abs(const VectorQ& v);
/// Indices of the nonzero entries.
IndexSet support(const VectorQ& v);
/// {0..n-1} minus `s`.
IndexSet complement(const IndexSet& s, std::size_t n);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
bool disjoint_sets(const IndexSet& a, const IndexSet& b);

/// Positive rescaling to a primitive integer vector (gcd 1). Direction and
/// orientation are preserved; the zero vector is returned unchanged.
VectorQ primitive(const VectorQ& v);

/// If v = t * base with t > 0 returns t.
std::optional<Rational> positive_multiple(const VectorQ& v, const VectorQ& base);

struct Echelon {
  MatrixQ reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(MatrixQ a);
std::size_t rank(const MatrixQ& a);
std::size_t rank(std::span<const VectorQ> vectors, std::size_t dim);

/// Solution of A x = b with free variables set to zero, or nullopt when
/// inconsistent. Throws Error(DimensionMismatch) when rows(A) != size(b).
std::optional<VectorQ> solve_linear(const MatrixQ& a, const VectorQ& b);

/// Canonical basis of ker A (see canonical_basis).
std::vector<VectorQ> nullspace(const MatrixQ& a);

/// Canonical basis of span(vectors): the nonzero rows of the reduced row
/// echelon form, each scaled to a primitive integer vector with positive
/// leading entry. Two families span the same subspace iff their canonical
/// bases are equal.
std::vector<VectorQ> canonical_basis(std::span<const VectorQ> vectors, std::size_t dim);

std::optional<MatrixQ> inverse(const MatrixQ& a);

/// Matrix whose columns are the given vectors.
MatrixQ from_columns(std::span<const VectorQ> columns, std::size_t dim);

}  // namespace ordercone
