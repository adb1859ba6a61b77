#include "ordercone/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ordercone/error.hpp"

namespace ordercone {

namespace {

void require_same_length(const VectorQ& a, const VectorQ& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch,
                "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

}  // namespace

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, VectorQ(cols)) {}

MatrixQ MatrixQ::from_rows(std::vector<VectorQ> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw Error(Errc::DimensionMismatch, "ragged matrix: expected rows of length " +
                                               std::to_string(cols) + ", got " +
                                               std::to_string(r.size()));
    }
  }
  MatrixQ m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

MatrixQ MatrixQ::from_rows(std::vector<VectorQ> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return from_rows(std::move(rows), cols);
}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

VectorQ MatrixQ::column(std::size_t j) const {
  VectorQ c(rows());
  for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
  return c;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
  return t;
}

MatrixQ MatrixQ::select_rows(std::span<const std::size_t> indices) const {
  std::vector<VectorQ> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(rows_.at(i));
  return from_rows(std::move(out), cols_);
}

MatrixQ MatrixQ::drop_row(std::size_t index) const {
  std::vector<VectorQ> out;
  for (std::size_t i = 0; i < rows(); ++i)
    if (i != index) out.push_back(rows_[i]);
  return from_rows(std::move(out), cols_);
}

VectorQ MatrixQ::operator*(const VectorQ& x) const {
  if (x.size() != cols_) {
    throw Error(Errc::DimensionMismatch, "matrix has " + std::to_string(cols_) +
                                             " columns, vector has length " +
                                             std::to_string(x.size()));
  }
  VectorQ y(rows());
  for (std::size_t i = 0; i < rows(); ++i) y[i] = dot(rows_[i], x);
  return y;
}

MatrixQ MatrixQ::operator*(const MatrixQ& other) const {
  if (other.rows() != cols_) throw Error(Errc::DimensionMismatch, "matrix product shape");
  MatrixQ p(rows(), other.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (rows_[i][k] == 0) continue;
      for (std::size_t j = 0; j < other.cols(); ++j) p(i, j) += rows_[i][k] * other(k, j);
    }
  return p;
}

VectorQ zero_vector(std::size_t n) { return VectorQ(n); }

VectorQ unit_vector(std::size_t n, std::size_t i) {
  VectorQ e(n);
  e.at(i) = 1;
  return e;
}

VectorQ add(const VectorQ& a, const VectorQ& b) {
  require_same_length(a, b);
  VectorQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

VectorQ sub(const VectorQ& a, const VectorQ& b) {
  require_same_length(a, b);
  VectorQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

VectorQ scale(const Rational& t, const VectorQ& v) {
  VectorQ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = t * v[i];
  return r;
}

VectorQ negate(const VectorQ& v) { return scale(Rational(-1), v); }

Rational dot(const VectorQ& a, const VectorQ& b) {
  require_same_length(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(const VectorQ& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

bool is_nonnegative(const VectorQ& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q >= 0; });
}

VectorQ cw_max(const VectorQ& a, const VectorQ& b) {
  require_same_length(a, b);
  VectorQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? b[i] : a[i];
  return r;
}

VectorQ cw_min(const VectorQ& a, const VectorQ& b) {
  require_same_length(a, b);
  VectorQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] < a[i] ? b[i] : a[i];
  return r;
}

VectorQ cw_abs(const VectorQ& v) {
  VectorQ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = abs_value(v[i]);
  return r;
}

IndexSet support(const VectorQ& v) {
  IndexSet s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

IndexSet complement(const IndexSet& s, std::size_t n) {
  IndexSet c;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k < s.size() && s[k] < i) ++k;
    if (k < s.size() && s[k] == i) continue;
    c.push_back(i);
  }
  return c;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

bool disjoint_sets(const IndexSet& a, const IndexSet& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return true;
}

VectorQ primitive(const VectorQ& v) {
  if (is_zero(v)) return v;
  Integer den_lcm = 1;
  for (const auto& q : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (den_lcm / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  VectorQ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

std::optional<Rational> positive_multiple(const VectorQ& v, const VectorQ& base) {
  require_same_length(v, base);
  std::optional<Rational> t;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (base[i] == 0) {
      if (v[i] != 0) return std::nullopt;
      continue;
    }
    Rational ratio = v[i] / base[i];
    if (!t) t = ratio;
    else if (*t != ratio) return std::nullopt;
  }
  if (!t || *t <= 0) return std::nullopt;
  return t;
}

Echelon rref(MatrixQ a) {
  Echelon e;
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    if (p != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < n; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < n; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const MatrixQ& a) { return rref(a).pivots.size(); }

std::size_t rank(std::span<const VectorQ> vectors, std::size_t dim) {
  return rank(MatrixQ::from_rows(std::vector<VectorQ>(vectors.begin(), vectors.end()), dim));
}

std::optional<VectorQ> solve_linear(const MatrixQ& a, const VectorQ& b) {
  if (a.rows() != b.size()) {
    throw Error(Errc::DimensionMismatch, "system has " + std::to_string(a.rows()) +
                                             " rows but right-hand side has " +
                                             std::to_string(b.size()) + " entries");
  }
  const std::size_t n = a.cols();
  MatrixQ aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  VectorQ x(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, n);
  return x;
}

std::vector<VectorQ> canonical_basis(std::span<const VectorQ> vectors, std::size_t dim) {
  const Echelon e = rref(MatrixQ::from_rows(std::vector<VectorQ>(vectors.begin(), vectors.end()), dim));
  std::vector<VectorQ> basis;
  basis.reserve(e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.push_back(primitive(e.reduced.row(r)));
  return basis;
}

std::vector<VectorQ> nullspace(const MatrixQ& a) {
  const std::size_t n = a.cols();
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<VectorQ> raw;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    VectorQ v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    raw.push_back(std::move(v));
  }
  return canonical_basis(raw, n);
}

std::optional<MatrixQ> inverse(const MatrixQ& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  if (n == 0) return MatrixQ();
  MatrixQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  MatrixQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

MatrixQ from_columns(std::span<const VectorQ> columns, std::size_t dim) {
  MatrixQ m(dim, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != dim) throw Error(Errc::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

}  // namespace ordercone
