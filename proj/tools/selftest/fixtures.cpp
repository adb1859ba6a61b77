#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace ordercone::selftest {

VectorQ vec(std::initializer_list<long> entries) {
  VectorQ v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

const std::vector<VectorQ>& four_ray_generators() {
  static const std::vector<VectorQ> g{vec({1, 0, 1}), vec({0, 1, 1}), vec({-1, 0, 1}), vec({0, -1, 1})};
  return g;
}

const std::vector<VectorQ>& four_ray_facets() {
  static const std::vector<VectorQ> f{vec({-1, -1, 1}), vec({1, -1, 1}), vec({1, 1, 1}), vec({-1, 1, 1})};
  return f;
}

OrderedSpace four_ray_space() {
  return build_space(3, four_ray_generators(), four_ray_facets(), "four-ray");
}

OrderedSpace simplex_space(std::size_t n) {
  std::vector<VectorQ> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
  return build_space(n, basis, basis, "simplex:" + std::to_string(n));
}

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

OrderedSpace random_simplicial_space(Rng& rng, std::size_t max_dim) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_dim)));
  MatrixQ u = MatrixQ::identity(n);
  if (n > 1) {
    for (std::size_t step = 0; step < 2 * n; ++step) {
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
      if (j >= i) ++j;
      const Rational c = uniform(rng, 0, 1) == 0 ? -1 : 1;
      for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
    }
  }
  std::vector<VectorQ> generators;
  for (std::size_t k = 0; k < n; ++k) generators.push_back(u.column(k));
  std::shuffle(generators.begin(), generators.end(), rng);
  return build_space(n, generators, std::nullopt, "simplicial-" + std::to_string(n));
}

namespace {

std::vector<VectorQ> lift(const std::vector<std::vector<long>>& points) {
  std::vector<VectorQ> out;
  for (const auto& p : points) {
    VectorQ v;
    for (long c : p) v.emplace_back(c);
    v.emplace_back(1);
    out.push_back(std::move(v));
  }
  return out;
}

const std::vector<VectorQ>& octagon() {
  static const auto pts = lift({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2}, {1, -2}, {2, -1}});
  return pts;
}

const std::vector<VectorQ>& cube() {
  static const auto pts = lift({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
                                {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
  return pts;
}

const std::vector<VectorQ>& cuboctahedron() {
  static const auto pts = lift({{1, 1, 0}, {1, -1, 0}, {-1, 1, 0}, {-1, -1, 0},
                                {1, 0, 1}, {1, 0, -1}, {-1, 0, 1}, {-1, 0, -1},
                                {0, 1, 1}, {0, 1, -1}, {0, -1, 1}, {0, -1, -1}});
  return pts;
}

}  // namespace

OrderedSpace random_polyhedral_space(Rng& rng) {
  const long family = uniform(rng, 0, 2);
  const auto& pool = family == 0 ? octagon() : family == 1 ? cube() : cuboctahedron();
  const std::size_t dim = pool.front().size();
  const long lo = family == 0 ? 3 : 4;
  const long hi = family == 0 ? 6 : 7;
  for (;;) {
    std::vector<VectorQ> chosen = pool;
    std::shuffle(chosen.begin(), chosen.end(), rng);
    chosen.resize(static_cast<std::size_t>(uniform(rng, lo, hi)));
    if (rank(chosen, dim) < dim) continue;
    return build_space(dim, chosen, std::nullopt, "polyhedral-" + std::to_string(chosen.size()));
  }
}

OrderedSpace random_space(Rng& rng, std::size_t index) {
  return index % 2 == 0 ? random_simplicial_space(rng) : random_polyhedral_space(rng);
}

VectorQ random_vector(Rng& rng, std::size_t n, long bound) {
  VectorQ v(n);
  for (auto& e : v) e = uniform(rng, -bound, bound);
  return v;
}

VectorQ random_cone_vector(Rng& rng, const OrderedSpace& s, long bound) {
  VectorQ v = zero_vector(s.dim());
  for (const auto& g : s.cone().generators) v = add(v, scale(uniform(rng, 0, bound), g));
  return v;
}

Subspace random_subspace(Rng& rng, std::size_t n) {
  const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n)));
  std::vector<VectorQ> vs;
  for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(rng, n, 2));
  return Subspace::span(vs, n);
}

}  // namespace ordercone::selftest
