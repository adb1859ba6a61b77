#include "support.hpp"

namespace ordercone::testing {

std::optional<VectorQ> oracle_solve_square(std::vector<VectorQ> a, VectorQ b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= factor * a[col][k];
      b[r] -= factor * b[col];
    }
  }
  VectorQ x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

namespace {

template <typename Fn>
void for_each_subset(std::size_t total, std::size_t size, Fn&& fn) {
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  if (size > total) return;
  for (;;) {
    fn(idx);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == total - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<VectorQ> oracle_vertices(const MatrixQ& a, const VectorQ& b) {
  const std::size_t n = a.cols();
  std::vector<VectorQ> out;
  for_each_subset(a.rows(), n, [&](const std::vector<std::size_t>& rows) {
    std::vector<VectorQ> sq;
    VectorQ rhs;
    for (auto r : rows) {
      sq.push_back(a.row(r));
      rhs.push_back(b[r]);
    }
    const auto x = oracle_solve_square(sq, rhs);
    if (!x) return;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Rational lhs = 0;
      for (std::size_t k = 0; k < n; ++k) lhs += a(r, k) * (*x)[k];
      if (lhs < b[r]) return;
    }
    if (std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(*x);
  });
  return out;
}

std::optional<Rational> oracle_max(const VectorQ& c, const MatrixQ& a, const VectorQ& b) {
  std::optional<Rational> best;
  for (const auto& v : oracle_vertices(a, b)) {
    Rational value = 0;
    for (std::size_t k = 0; k < c.size(); ++k) value += c[k] * v[k];
    if (!best || value > *best) best = value;
  }
  return best;
}

bool oracle_in_cone(const std::vector<VectorQ>& generators, const VectorQ& x) {
  const std::size_t n = x.size();
  bool found = false;
  for_each_subset(generators.size(), n, [&](const std::vector<std::size_t>& chosen) {
    if (found) return;
    std::vector<VectorQ> sq(n, VectorQ(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) sq[r][k] = generators[chosen[k]][r];
    const auto t = oracle_solve_square(sq, x);
    if (t && std::all_of(t->begin(), t->end(), [](const Rational& e) { return e >= 0; })) found = true;
  });
  return found;
}

VectorQ oracle_apply(const std::vector<VectorQ>& rows, const VectorQ& x) {
  VectorQ out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < x.size(); ++k) out[i] += rows[i][k] * x[k];
  return out;
}

}  // namespace ordercone::testing
