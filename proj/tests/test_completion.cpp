#include "support.hpp"

namespace ordercone::testing {
namespace {

// inf f_j over {F z >= w}, taken over the vertices of the polyhedron. The
// polyhedron is pointed (F injective) and every f_j is bounded below on it.
std::vector<Rational> oracle_infima(const OrderedSpace& s, const VectorQ& w) {
  const auto vertices = oracle_vertices(s.functionals(), w);
  std::vector<Rational> out;
  for (std::size_t j = 0; j < s.facet_count(); ++j) {
    std::optional<Rational> best;
    for (const auto& z : vertices) {
      const Rational value = dot(s.functionals().row(j), z);
      if (!best || value < *best) best = value;
    }
    out.push_back(*best);
  }
  return out;
}

bool oracle_modulus_dominates(const OrderedSpace& s, const VectorQ& x, const VectorQ& y) {
  const auto infima = oracle_infima(s, cw_abs(oracle_apply(s.cone().facets, y)));
  const VectorQ need = cw_abs(oracle_apply(s.cone().facets, x));
  for (std::size_t j = 0; j < need.size(); ++j)
    if (infima[j] < need[j]) return false;
  return true;
}

TEST(Embed, Examples) {
  const OrderedSpace s = four_ray_space();
  const auto& v = four_ray_generators();
  EXPECT_EQ(embed(s, v[0]), vec({0, 2, 2, 0}));
  EXPECT_EQ(embed(s, add(v[0], v[1])), vec({0, 2, 4, 2}));
  EXPECT_EQ(embed(simplex_space(3), vec({1, -2, 3})), vec({1, -2, 3}));
  expect_error(Errc::DimensionMismatch, [&] { embed(s, vec({1, 0})); });
}

TEST(Embed, MatchesExplicitProductAndIsBipositive) {
  Rng rng(31);
  for (std::size_t round = 0; round < 25; ++round) {
    const OrderedSpace s = selftest::random_space(rng, round);
    for (int t = 0; t < 20; ++t) {
      const VectorQ x = selftest::random_vector(rng, s.dim(), 3);
      const VectorQ y = embed(s, x);
      EXPECT_EQ(y, oracle_apply(s.cone().facets, x));
      EXPECT_EQ(is_nonnegative(y), oracle_in_cone(s.cone().generators, x));
      EXPECT_TRUE(in_range(s, y));
    }
  }
}

TEST(Embed, RangeRelationsAnnihilateF) {
  const OrderedSpace s = four_ray_space();
  ASSERT_EQ(s.completion().range_relations.size(), 1u);
  const VectorQ r = s.completion().range_relations[0];
  EXPECT_TRUE(positive_multiple(r, vec({1, -1, 1, -1})) || positive_multiple(r, vec({-1, 1, -1, 1})));
  EXPECT_FALSE(in_range(s, vec({1, 0, 0, 0})));
  EXPECT_TRUE(simplex_space(3).completion().range_relations.empty());
}

TEST(Embed, SimplicialIsOrderIsomorphism) {
  Rng rng(32);
  for (int round = 0; round < 50; ++round) {
    const OrderedSpace s = selftest::random_simplicial_space(rng);
    EXPECT_EQ(s.facet_count(), s.dim());
    EXPECT_TRUE(inverse(s.functionals()).has_value());
    const VectorQ y = selftest::random_vector(rng, s.dim(), 3);
    const auto x = pull_back(s, y);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(embed(s, *x), y);
  }
}

TEST(ModulusDominates, Examples) {
  const OrderedSpace s = four_ray_space();
  const auto& v = four_ray_generators();
  EXPECT_TRUE(modulus_dominates(s, v[0], add(v[0], v[1])));
  EXPECT_TRUE(modulus_dominates(s, scale(q(1, 2), vec({1, -2, 5})), vec({1, -2, 5})));
  EXPECT_FALSE(modulus_dominates(simplex_space(2), vec({1, 0}), vec({0, 1})));
}

TEST(ModulusDominates, AgreesWithVertexOracle) {
  Rng rng(33);
  int hits = 0;
  for (std::size_t round = 0; round < 20; ++round) {
    const OrderedSpace s = selftest::random_space(rng, round);
    for (int t = 0; t < 15; ++t) {
      const VectorQ y = selftest::random_vector(rng, s.dim(), 2);
      const VectorQ x = t % 3 ? selftest::random_vector(rng, s.dim(), 2) : scale(q(1, 3), y);
      const bool got = modulus_dominates(s, x, y);
      EXPECT_EQ(got, oracle_modulus_dominates(s, x, y)) << s.name();
      hits += got;
    }
  }
  EXPECT_GT(hits, 0);
}

TEST(OrderDensity, Examples) {
  const OrderedSpace s = four_ray_space();
  EXPECT_TRUE(order_density_at(s, vec({1, 0, 0, 0})));
  EXPECT_TRUE(order_density_at(s, vec({0, 2, 2, 0})));
  EXPECT_EQ(oracle_infima(s, vec({1, 0, 0, 0})), vec({1, 0, 0, 0}));
  EXPECT_EQ(coordinate_infima(s, vec({1, 0, 0, 0})), vec({1, 0, 0, 0}));
}

TEST(OrderDensity, CanonicalGridAndRandomPoints) {
  Rng rng(34);
  for (std::size_t round = 0; round < 12; ++round) {
    const OrderedSpace s = round == 0 ? four_ray_space() : selftest::random_space(rng, round);
    const std::size_t m = s.facet_count();
    if (m <= 6) {
      std::size_t total = 1;
      for (std::size_t j = 0; j < m; ++j) total *= 3;
      for (std::size_t code = 0; code < total; ++code) {
        VectorQ y(m);
        std::size_t c = code;
        for (std::size_t j = 0; j < m; ++j, c /= 3) y[j] = static_cast<long>(c % 3) - 1;
        EXPECT_TRUE(order_density_at(s, y)) << s.name();
      }
    }
    for (int t = 0; t < 10; ++t) {
      const VectorQ y = selftest::random_vector(rng, m, 3);
      EXPECT_EQ(coordinate_infima(s, y), oracle_infima(s, y)) << s.name();
      EXPECT_TRUE(order_density_at(s, y));
    }
  }
}

TEST(Majorizing, Examples) {
  const OrderedSpace s = four_ray_space();
  EXPECT_TRUE(is_majorizing(s, Subspace::full(3), {0, 1, 2, 3}));
  EXPECT_TRUE(is_majorizing(s, span_of({four_ray_generators()[0]}, 3), {1, 2}));
  EXPECT_FALSE(is_majorizing(s, Subspace::zero(3), {0}));
  // span{v1} cannot reach coordinate 1.
  EXPECT_FALSE(is_majorizing(s, span_of({four_ray_generators()[0]}, 3), {0, 1}));
}

TEST(Completion, RieszDecompositionInTheCover) {
  Rng rng(35);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = static_cast<std::size_t>(selftest::uniform(rng, 1, 8));
    VectorQ y1(m), y2(m), y(m);
    for (std::size_t j = 0; j < m; ++j) {
      y1[j] = selftest::uniform(rng, 0, 5);
      y2[j] = selftest::uniform(rng, 0, 5);
      y[j] = selftest::uniform(rng, 0, 10);
    }
    y = cw_min(y, add(y1, y2));
    const VectorQ z1 = cw_min(y, y1);
    const VectorQ z2 = sub(y, z1);
    EXPECT_TRUE(is_nonnegative(z1));
    EXPECT_TRUE(is_nonnegative(z2));
    EXPECT_TRUE(is_nonnegative(sub(y1, z1)));
    EXPECT_TRUE(is_nonnegative(sub(y2, z2)));
  }
}

}  // namespace
}  // namespace ordercone::testing
