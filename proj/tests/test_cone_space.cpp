#include "support.hpp"

namespace ordercone::testing {
namespace {

bool is_positive_multiple_of_one(const VectorQ& v, const std::vector<VectorQ>& candidates) {
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const VectorQ& c) { return positive_multiple(v, c).has_value(); });
}

TEST(BuildSpace, StandardBasisGivesIdentityFacets) {
  const OrderedSpace s = space_from_generators(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  // Computed facets are sorted lexicographically.
  EXPECT_EQ(s.cone().facets, (std::vector<VectorQ>{vec({0, 0, 1}), vec({0, 1, 0}), vec({1, 0, 0})}));
  EXPECT_EQ(simplex_space(3).functionals(), MatrixQ::identity(3));
  EXPECT_EQ(s.facet_count(), 3u);
}

TEST(BuildSpace, FourRayFacetsFromGenerators) {
  const OrderedSpace s = space_from_generators(3, four_ray_generators());
  ASSERT_EQ(s.cone().facets.size(), 4u);
  for (const auto& f : s.cone().facets) EXPECT_TRUE(is_positive_multiple_of_one(f, four_ray_facets()));
  // Each listed functional f_i vanishes on exactly two consecutive rays.
  const auto& v = four_ray_generators();
  const auto& f = four_ray_facets();
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(dot(f[i], v[i]), 0);
    EXPECT_EQ(dot(f[i], v[(i + 1) % 4]), 0);
    EXPECT_EQ(dot(f[i], v[(i + 2) % 4]), 2);
  }
}

TEST(BuildSpace, FacetsOnlyAndBothRepresentations) {
  const OrderedSpace a = build_space(3, std::nullopt, four_ray_facets(), "a");
  EXPECT_EQ(a.cone().facets, four_ray_facets());
  EXPECT_EQ(a.cone().generators.size(), 4u);
  for (const auto& g : a.cone().generators) EXPECT_TRUE(is_positive_multiple_of_one(g, four_ray_generators()));

  const OrderedSpace b = four_ray_space();
  EXPECT_EQ(b.cone().generators, four_ray_generators());
  EXPECT_EQ(b.cone().facets, four_ray_facets());
}

TEST(BuildSpace, RejectsInvalidCones) {
  expect_error(Errc::NotPointed, [] { space_from_generators(2, {vec({1, 0}), vec({-1, 0})}); });
  expect_error(Errc::NotGenerating, [] { space_from_generators(3, {vec({1, 0, 0}), vec({0, 1, 0})}); });
  expect_error(Errc::EmptyInput, [] { build_space(0, std::vector<VectorQ>{}, std::nullopt, "x"); });
  expect_error(Errc::EmptyInput, [] { build_space(2, std::nullopt, std::nullopt, "x"); });
  expect_error(Errc::DimensionMismatch, [] { space_from_generators(2, {vec({1, 0, 0})}); });
  // Facets of a half-plane: not pointed.
  expect_error(Errc::NotPointed, [] { build_space(2, std::nullopt, std::vector<VectorQ>{vec({1, 0})}, "x"); });
  // f1 replaced by a valid but redundant inequality.
  auto facets = four_ray_facets();
  facets[0] = vec({-1, -1, 2});
  expect_error(Errc::InconsistentRepresentation,
               [&] { build_space(3, four_ray_generators(), facets, "x"); });
  // A facet violated by a generator.
  facets = four_ray_facets();
  facets[0] = vec({-1, -1, 0});
  expect_error(Errc::InconsistentRepresentation,
               [&] { build_space(3, four_ray_generators(), facets, "x"); });
}

TEST(BuildSpace, DropsRedundantGeneratorsAndScaling) {
  const OrderedSpace s = space_from_generators(
      3, {vec({2, 0, 2}), vec({0, 1, 1}), vec({-1, 0, 1}), vec({0, -1, 1}), vec({0, 0, 1}), vec({1, 1, 2})});
  EXPECT_EQ(s.cone().generators.size(), 4u);
  for (const auto& g : s.cone().generators) EXPECT_TRUE(is_positive_multiple_of_one(g, four_ray_generators()));
  for (const auto& g : s.cone().generators) EXPECT_EQ(primitive(g), g);
}

TEST(BuildSpace, RepresentationDualityOnRandomCones) {
  Rng rng(21);
  for (std::size_t round = 0; round < 200; ++round) {
    const OrderedSpace s = selftest::random_space(rng, round);
    const std::size_t n = s.dim();
    for (const auto& g : s.cone().generators) {
      std::vector<VectorQ> tight;
      for (const auto& f : s.cone().facets) {
        EXPECT_GE(dot(f, g), 0);
        if (dot(f, g) == 0) tight.push_back(f);
      }
      EXPECT_EQ(rank(tight, n), n - 1) << s.name();
    }
    const OrderedSpace back = build_space(n, std::nullopt, s.cone().facets, "back");
    auto a = back.cone().generators;
    auto b = s.cone().generators;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b) << s.name();
  }
}

TEST(Leq, Examples) {
  const OrderedSpace s = four_ray_space();
  const auto& v = four_ray_generators();
  EXPECT_TRUE(leq(s, v[0], add(v[0], v[1])));
  EXPECT_TRUE(leq(s, v[1], add(v[0], v[2])));
  EXPECT_EQ(oracle_apply(four_ray_facets(), sub(add(v[0], v[2]), v[1])), vec({2, 2, 0, 0}));
  const OrderedSpace q2 = simplex_space(2);
  EXPECT_FALSE(leq(q2, vec({1, 0}), vec({0, 1})));
  expect_error(Errc::DimensionMismatch, [&] { leq(q2, vec({1, 0}), vec({0, 1, 0})); });
}

TEST(Leq, IsAPartialOrder) {
  Rng rng(22);
  for (std::size_t round = 0; round < 40; ++round) {
    const OrderedSpace s = selftest::random_space(rng, round);
    for (int t = 0; t < 30; ++t) {
      const VectorQ x = selftest::random_vector(rng, s.dim(), 2);
      const VectorQ y = add(x, selftest::random_cone_vector(rng, s, 1));
      const VectorQ z = t % 2 ? add(y, selftest::random_cone_vector(rng, s, 1)) : selftest::random_vector(rng, s.dim(), 2);
      EXPECT_TRUE(leq(s, x, x));
      EXPECT_TRUE(leq(s, x, y));
      if (leq(s, y, x)) EXPECT_EQ(x, y);
      if (leq(s, y, z)) EXPECT_TRUE(leq(s, x, z));
      // Membership agrees with the generator description.
      EXPECT_EQ(in_cone(s, sub(z, x)), oracle_in_cone(s.cone().generators, sub(z, x)));
    }
  }
}

TEST(Leq, Archimedean) {
  // n x <= y for n up to 10^6 forces x <= 0; a single positive coordinate of
  // F x is eventually violated.
  const OrderedSpace s = four_ray_space();
  const VectorQ y = vec({0, 0, 5});
  const VectorQ x = vec({0, 0, 1});
  EXPECT_TRUE(leq(s, scale(5, x), y));
  EXPECT_FALSE(leq(s, scale(1000000, x), y));
  EXPECT_TRUE(leq(s, scale(1000000, negate(x)), y));
}

TEST(UpperBounds, Examples) {
  const OrderedSpace s = four_ray_space();
  const auto& v = four_ray_generators();
  const Polyhedron k = upper_bound_polyhedron(s, std::vector<VectorQ>{vec({0, 0, 0})});
  EXPECT_EQ(k.b, vec({0, 0, 0, 0}));
  const VectorQ x = vec({1, -2, 0});
  const Polyhedron sym = upper_bound_polyhedron(s, std::vector<VectorQ>{x, negate(x)});
  EXPECT_EQ(sym.b, cw_abs(embed(s, x)));
  const Polyhedron p = upper_bound_polyhedron(s, std::vector<VectorQ>{v[0], v[1]});
  EXPECT_EQ(p.b, vec({0, 2, 2, 2}));
  EXPECT_EQ(p.a, MatrixQ::from_rows(four_ray_facets()));
  expect_error(Errc::EmptyInput, [&] { upper_bound_polyhedron(s, std::vector<VectorQ>{}); });
}

TEST(Sup, Examples) {
  EXPECT_EQ(sup_in_x(simplex_space(2), std::vector<VectorQ>{vec({1, 0}), vec({0, 1})}), vec({1, 1}));
  const OrderedSpace s = four_ray_space();
  const auto& v = four_ray_generators();
  EXPECT_EQ(sup_in_x(s, std::vector<VectorQ>{v[0], v[2]}), vec({0, 0, 2}));
  EXPECT_FALSE(sup_in_x(s, std::vector<VectorQ>{v[0], v[1]}).has_value());
}

TEST(Sup, FourRayNonExistenceByVertexOracle) {
  // Coordinate minima over {v1,v2}^u from the vertices of the polyhedron;
  // they violate the range relation y1 - y2 + y3 - y4 = 0, so no single
  // upper bound attains them all.
  const MatrixQ f = MatrixQ::from_rows(four_ray_facets());
  const VectorQ w = vec({0, 2, 2, 2});
  const auto vertices = oracle_vertices(f, w);
  ASSERT_FALSE(vertices.empty());
  VectorQ minima(4);
  for (std::size_t j = 0; j < 4; ++j) {
    std::optional<Rational> best;
    for (const auto& z : vertices) {
      const Rational value = dot(four_ray_facets()[j], z);
      if (!best || value < *best) best = value;
    }
    minima[j] = *best;
  }
  EXPECT_EQ(minima, w);
  EXPECT_NE(minima[0] - minima[1] + minima[2] - minima[3], 0);
}

TEST(Sup, LeastUpperBoundProperties) {
  Rng rng(23);
  int found = 0;
  for (std::size_t round = 0; round < 60; ++round) {
    const OrderedSpace s = selftest::random_space(rng, round);
    std::vector<VectorQ> m;
    for (int k = 0; k < 2; ++k) m.push_back(selftest::random_vector(rng, s.dim(), 3));
    const auto sup = sup_in_x(s, m);
    VectorQ top = embed(s, m[0]);
    for (const auto& x : m) top = cw_max(top, embed(s, x));
    if (in_range(s, top)) {
      ASSERT_TRUE(sup.has_value());
      EXPECT_EQ(embed(s, *sup), top);
    }
    if (!sup) continue;
    ++found;
    const Polyhedron p = upper_bound_polyhedron(s, m);
    EXPECT_TRUE(p.contains(*sup));
    for (const auto& z : oracle_vertices(p.a, p.b)) EXPECT_TRUE(leq(s, *sup, z));
    for (int t = 0; t < 5; ++t) {
      const VectorQ z = add(*sup, selftest::random_cone_vector(rng, s, 2));
      EXPECT_TRUE(leq(s, *sup, z));
    }
  }
  EXPECT_GT(found, 20);
}

}  // namespace
}  // namespace ordercone::testing
