#include "ordercone/bands.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "ordercone/error.hpp"

namespace ordercone {

namespace {

bool upper_sets_equal(const OrderedSpace& s, const VectorQ& u, const VectorQ& w) {
  const auto within = [&](const VectorQ& upper, const VectorQ& lower) {
    const Polyhedron p{s.functionals(), upper};
    for (std::size_t j = 0; j < s.facet_count(); ++j) {
      if (lower[j] <= upper[j]) continue;
      const LPOutcome o = lp(s.functionals().row(j), p, Sense::Minimize);
      if (std::get<Optimal>(o).value < lower[j]) return false;
    }
    return true;
  };
  return within(u, w) && within(w, u);
}

IndexSet union_support(const OrderedSpace& s, std::span<const VectorQ> vs) {
  IndexSet j;
  for (const auto& v : vs) j = set_union(j, support(embed(s, v)));
  return j;
}

bool basis_less(const Band& a, const Band& b) {
  if (a.carrier.dim() != b.carrier.dim()) return a.carrier.dim() < b.carrier.dim();
  const auto& x = a.carrier.basis();
  const auto& y = b.carrier.basis();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](const VectorQ& p, const VectorQ& q) {
                                        return std::lexicographical_compare(p.begin(), p.end(),
                                                                            q.begin(), q.end());
                                      });
}

}  // namespace

bool is_disjoint(const OrderedSpace& s, const VectorQ& x, const VectorQ& y) {
  return disjoint_sets(support(embed(s, x)), support(embed(s, y)));
}

bool disjoint_eq1_oracle(const OrderedSpace& s, const VectorQ& x, const VectorQ& y) {
  // {v, -v}^u = {z : F z >= |F v|}
  const VectorQ sum_mod = cw_abs(s.functionals() * add(x, y));
  const VectorQ diff_mod = cw_abs(s.functionals() * sub(x, y));
  return upper_sets_equal(s, sum_mod, diff_mod);
}

IndexSet zero_set_of(const OrderedSpace& s, const Subspace& d) {
  return complement(union_support(s, d.basis()), s.facet_count());
}

Subspace coordinate_kernel(const OrderedSpace& s, const IndexSet& j) {
  return Subspace::kernel(s.functionals().select_rows(j));
}

Band make_band(const OrderedSpace& s, Subspace carrier) {
  Band b;
  b.zero_set = zero_set_of(s, carrier);
  b.directed = is_directed_subspace(s, carrier);
  b.carrier = std::move(carrier);
  return b;
}

Band disjoint_complement(const OrderedSpace& s, std::span<const VectorQ> m) {
  return make_band(s, coordinate_kernel(s, union_support(s, m)));
}

Band disjoint_complement(const OrderedSpace& s, const Subspace& d) {
  return disjoint_complement(s, std::span<const VectorQ>(d.basis()));
}

Band band_of(const OrderedSpace& s, const VectorQ& a) {
  const VectorQ single[] = {a};
  return disjoint_complement(s, disjoint_complement(s, single).carrier);
}

bool is_band(const OrderedSpace& s, const Subspace& d) {
  const Subspace d_perp = coordinate_kernel(s, union_support(s, d.basis()));
  return coordinate_kernel(s, union_support(s, d_perp.basis())) == d;
}

std::vector<Band> enumerate_bands(const OrderedSpace& s, std::size_t cap) {
  const std::size_t m = s.facet_count();
  if (m > cap || m >= 63) {
    throw Error(Errc::CapExceeded, "band enumeration over 2^" + std::to_string(m) +
                                       " coordinate sets exceeds the cap of 2^" + std::to_string(cap));
  }
  std::map<std::vector<VectorQ>, Subspace> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    IndexSet j;
    for (std::size_t t = 0; t < m; ++t)
      if (mask & (std::uint64_t{1} << t)) j.push_back(t);
    Subspace z = coordinate_kernel(s, j);
    if (found.contains(z.basis())) continue;
    if (is_band(s, z)) found.emplace(z.basis(), std::move(z));
  }
  std::vector<Band> bands;
  bands.reserve(found.size());
  for (auto& [key, carrier] : found) bands.push_back(make_band(s, std::move(carrier)));
  std::sort(bands.begin(), bands.end(), basis_less);
  return bands;
}

bool principal_ideal_member(const OrderedSpace& s, const VectorQ& x, const VectorQ& a) {
  // min f_j over {z : F z >= λ|F a|} is λ·c_j with c_j the value at λ = 1, so
  // a suitable λ exists iff c_j > 0 wherever |F x|_j > 0.
  const VectorQ target = cw_abs(embed(s, x));
  const std::vector<Rational> c = coordinate_infima(s, cw_abs(embed(s, a)));
  for (std::size_t j = 0; j < target.size(); ++j)
    if (target[j] > 0 && c[j] <= 0) return false;
  return true;
}

bool is_directed_subspace(const OrderedSpace& s, const Subspace& d) {
  if (d.dim() == 0) return true;
  // D ∩ K in basis coordinates is {c : (F B) c >= 0}, a pointed cone since F B
  // has full column rank.
  const MatrixQ g = s.functionals() * from_columns(d.basis(), s.dim());
  const std::vector<VectorQ> rays = extreme_rays(g);
  return rank(rays, d.dim()) == d.dim();
}

IndexSet extend_band(const OrderedSpace& s, const Band& b) {
  return union_support(s, b.carrier.basis());
}

Subspace restrict_band(const OrderedSpace& s, IndexSet j) {
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  for (auto idx : j) {
    if (idx >= s.facet_count()) {
      throw Error(Errc::PreconditionViolated, "coordinate index " + std::to_string(idx) + " out of range");
    }
  }
  return coordinate_kernel(s, complement(j, s.facet_count()));
}

}  // namespace ordercone
