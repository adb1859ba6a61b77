#include "ordercone/lp.hpp"

#include <string>
#include <utility>

#include "ordercone/error.hpp"

namespace ordercone {

bool Polyhedron::contains(const VectorQ& x) const {
  const VectorQ ax = a * x;
  for (std::size_t i = 0; i < ax.size(); ++i)
    if (ax[i] < b[i]) return false;
  return true;
}

PolyhedronBuilder& PolyhedronBuilder::at_least(VectorQ row, Rational rhs) {
  if (row.size() != n_) throw Error(Errc::DimensionMismatch, "constraint row length");
  rows_.push_back(std::move(row));
  rhs_.push_back(std::move(rhs));
  return *this;
}

PolyhedronBuilder& PolyhedronBuilder::at_most(VectorQ row, Rational rhs) {
  return at_least(negate(row), -rhs);
}

PolyhedronBuilder& PolyhedronBuilder::equal(VectorQ row, Rational rhs) {
  at_least(row, rhs);
  return at_most(std::move(row), std::move(rhs));
}

PolyhedronBuilder& PolyhedronBuilder::rows_at_least(const MatrixQ& f, const VectorQ& lower) {
  for (std::size_t i = 0; i < f.rows(); ++i) at_least(f.row(i), lower.at(i));
  return *this;
}

PolyhedronBuilder& PolyhedronBuilder::rows_at_most(const MatrixQ& f, const VectorQ& upper) {
  for (std::size_t i = 0; i < f.rows(); ++i) at_most(f.row(i), upper.at(i));
  return *this;
}

Polyhedron PolyhedronBuilder::build() const {
  return Polyhedron{MatrixQ::from_rows(rows_, n_), rhs_};
}

namespace {

// Dense tableau for  min c·v  s.t.  T v = rhs, v >= 0, with an explicit basis.
class Tableau {
 public:
  Tableau(std::vector<VectorQ> rows, VectorQ rhs, std::vector<std::size_t> basis, std::size_t columns)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)), columns_(columns) {}

  enum class Status { Optimal, Unbounded };

  // Bland's rule: lowest-index improving column enters; ratio ties leave by
  // lowest basic variable index.
  Status minimize(const VectorQ& cost, std::size_t usable_columns) {
    VectorQ reduced = cost;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < columns_; ++j)
        if (rows_[i][j] != 0) reduced[j] -= cb * rows_[i][j];
    }
    for (;;) {
      std::size_t enter = usable_columns;
      for (std::size_t j = 0; j < usable_columns; ++j) {
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == usable_columns) return Status::Optimal;

      std::size_t leave = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return Status::Unbounded;
      pivot(leave, enter);
      const Rational f = reduced[enter];
      for (std::size_t j = 0; j < columns_; ++j)
        if (rows_[leave][j] != 0) reduced[j] -= f * rows_[leave][j];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& e : rows_[r])
      if (e != 0) e *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j < columns_; ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  void erase_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  Rational objective(const VectorQ& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

  VectorQ values() const {
    VectorQ v(columns_);
    for (std::size_t i = 0; i < rows_.size(); ++i) v[basis_[i]] = rhs_[i];
    return v;
  }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  const Rational& entry(std::size_t r, std::size_t c) const { return rows_[r][c]; }

 private:
  std::vector<VectorQ> rows_;
  VectorQ rhs_;
  std::vector<std::size_t> basis_;
  std::size_t columns_;
};

// Greedy maximal independent subset of the rows, in order.
std::vector<std::size_t> independent_rows(const MatrixQ& a) {
  std::vector<std::size_t> chosen;
  std::vector<VectorQ> reduced;          // echelon rows, leading entry 1
  std::vector<std::size_t> lead;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    VectorQ v = a.row(i);
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if (v[lead[k]] == 0) continue;
      const Rational f = v[lead[k]];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (reduced[k][j] != 0) v[j] -= f * reduced[k][j];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) continue;
    const Rational inv = 1 / v[p];
    for (auto& e : v) e *= inv;
    reduced.push_back(std::move(v));
    lead.push_back(p);
    chosen.push_back(i);
    if (chosen.size() == a.cols()) break;
  }
  return chosen;
}

}  // namespace

LPOutcome lp(const VectorQ& objective, const Polyhedron& p, Sense sense) {
  const MatrixQ& a = p.a;
  const std::size_t n = a.cols(), m = a.rows();
  if (objective.size() != n) {
    throw Error(Errc::DimensionMismatch, "objective has length " + std::to_string(objective.size()) +
                                             ", polyhedron has " + std::to_string(n) + " variables");
  }
  if (p.b.size() != m) throw Error(Errc::DimensionMismatch, "right-hand side length");

  const std::vector<std::size_t> basis_rows = independent_rows(a);
  const std::size_t r = basis_rows.size();
  const MatrixQ a_i = a.select_rows(basis_rows);
  const std::vector<std::size_t> pivot_cols = rref(a_i).pivots;

  MatrixQ core(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) core(i, j) = a_i(i, pivot_cols[j]);
  const MatrixQ core_inv = *inverse(core);

  std::vector<bool> in_basis_rows(m, false);
  for (auto i : basis_rows) in_basis_rows[i] = true;
  VectorQ b_i(r);
  for (std::size_t k = 0; k < r; ++k) b_i[k] = p.b[basis_rows[k]];

  // Slacks s = A x - b. With x_P = core^{-1}(b_I + s_I) each remaining slack is
  // s_k = G_k s_I + g_k. Columns: s_I (0..r-1), s_R (r..), then artificials.
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < m; ++i)
    if (!in_basis_rows[i]) rest.push_back(i);
  const std::size_t q = rest.size();

  std::vector<VectorQ> g_rows(q);
  VectorQ g(q);
  std::size_t artificials = 0;
  for (std::size_t k = 0; k < q; ++k) {
    VectorQ a_kp(r);
    for (std::size_t j = 0; j < r; ++j) a_kp[j] = a(rest[k], pivot_cols[j]);
    VectorQ gk(r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t t = 0; t < r; ++t)
        if (a_kp[t] != 0) gk[j] += a_kp[t] * core_inv(t, j);
    g[k] = dot(gk, b_i) - p.b[rest[k]];
    g_rows[k] = std::move(gk);
    if (g[k] < 0) ++artificials;
  }

  const std::size_t structural = r + q;
  const std::size_t columns = structural + artificials;
  std::vector<VectorQ> rows(q, VectorQ(columns));
  VectorQ rhs(q);
  std::vector<std::size_t> basis(q);
  std::size_t next_art = structural;
  for (std::size_t k = 0; k < q; ++k) {
    // s_Rk - G_k s_I = g_k
    const bool flip = g[k] < 0;
    for (std::size_t j = 0; j < r; ++j) rows[k][j] = flip ? g_rows[k][j] : Rational(-g_rows[k][j]);
    rows[k][r + k] = flip ? -1 : 1;
    rhs[k] = flip ? Rational(-g[k]) : g[k];
    if (flip) {
      rows[k][next_art] = 1;
      basis[k] = next_art++;
    } else {
      basis[k] = r + k;
    }
  }

  Tableau tab(std::move(rows), std::move(rhs), std::move(basis), columns);
  if (artificials > 0) {
    VectorQ phase1(columns);
    for (std::size_t j = structural; j < columns; ++j) phase1[j] = 1;
    tab.minimize(phase1, columns);
    if (tab.objective(phase1) > 0) return Infeasible{};
    for (std::size_t i = 0; i < tab.row_count();) {
      if (tab.basic(i) < structural) {
        ++i;
        continue;
      }
      std::size_t col = structural;
      for (std::size_t j = 0; j < structural; ++j) {
        if (tab.entry(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col == structural) {
        tab.erase_row(i);
      } else {
        tab.pivot(i, col);
        ++i;
      }
    }
  }

  // Objective in terms of s_I, valid when the objective lies in the row space
  // of A; otherwise it varies along ker A and is unbounded on a nonempty set.
  std::vector<VectorQ> probe(a_i.row_list().begin(), a_i.row_list().end());
  probe.push_back(objective);
  const bool in_row_space = rank(probe, n) == r;

  VectorQ cost(columns);
  if (in_row_space) {
    for (std::size_t j = 0; j < r; ++j) {
      Rational h = 0;
      for (std::size_t t = 0; t < r; ++t) h += objective[pivot_cols[t]] * core_inv(t, j);
      cost[j] = sense == Sense::Maximize ? Rational(-h) : h;
    }
    if (tab.minimize(cost, structural) == Tableau::Status::Unbounded) return Unbounded{};
  }

  const VectorQ values = tab.values();
  VectorQ rhs_i = b_i;
  for (std::size_t j = 0; j < r; ++j) rhs_i[j] += values[j];
  const VectorQ x_p = core_inv * rhs_i;
  VectorQ x(n);
  for (std::size_t j = 0; j < r; ++j) x[pivot_cols[j]] = x_p[j];

  if (!in_row_space) return Unbounded{};
  return Optimal{dot(objective, x), std::move(x)};
}

std::optional<VectorQ> feasible_point(const Polyhedron& p) {
  const LPOutcome o = lp(zero_vector(p.variables()), p, Sense::Minimize);
  if (const auto* opt = std::get_if<Optimal>(&o)) return opt->point;
  return std::nullopt;
}

}  // namespace ordercone
