#include "support.hpp"

namespace ordercone::testing {
namespace {

const VectorQ& v(std::size_t k) { return four_ray_generators()[k - 1]; }

Subspace dd(const OrderedSpace& s, const Subspace& d) {
  return disjoint_complement(s, disjoint_complement(s, d).carrier).carrier;
}

TEST(Disjoint, Examples) {
  const OrderedSpace s = four_ray_space();
  EXPECT_TRUE(is_disjoint(s, v(1), v(3)));
  EXPECT_FALSE(is_disjoint(s, v(1), v(2)));
  EXPECT_TRUE(is_disjoint(s, vec({1, -5, 2}), vec({0, 0, 0})));
  EXPECT_TRUE(disjoint_eq1_oracle(s, v(1), v(3)));
  EXPECT_FALSE(disjoint_eq1_oracle(s, v(1), v(2)));
  EXPECT_TRUE(disjoint_eq1_oracle(s, vec({1, -5, 2}), vec({0, 0, 0})));
  EXPECT_FALSE(disjoint_eq1_oracle(simplex_space(2), vec({1, 1}), vec({1, -1})));
  EXPECT_FALSE(is_disjoint(simplex_space(2), vec({1, 1}), vec({1, -1})));
}

TEST(Disjoint, DualOraclesAgree) {
  Rng rng(41);
  int disjoint = 0;
  for (std::size_t round = 0; round < 20; ++round) {
    const OrderedSpace s = selftest::random_space(rng, round);
    const auto rays = s.cone().generators;
    for (int t = 0; t < 60; ++t) {
      VectorQ x, y;
      if (t % 2) {
        x = selftest::random_vector(rng, s.dim(), 2);
        y = selftest::random_vector(rng, s.dim(), 2);
      } else {
        // Elements of complementary coordinate kernels hit the disjoint case.
        x = rays[static_cast<std::size_t>(selftest::uniform(rng, 0, static_cast<long>(rays.size()) - 1))];
        const Band c = disjoint_complement(s, std::vector<VectorQ>{x});
        y = zero_vector(s.dim());
        for (const auto& b : c.carrier.basis()) y = add(y, scale(selftest::uniform(rng, -2, 2), b));
      }
      const bool got = is_disjoint(s, x, y);
      EXPECT_EQ(got, disjoint_eq1_oracle(s, x, y)) << s.name();
      EXPECT_EQ(got, disjoint_sets(support(oracle_apply(s.cone().facets, x)),
                                   support(oracle_apply(s.cone().facets, y))));
      disjoint += got;
    }
  }
  EXPECT_GT(disjoint, 50);
}

TEST(Complement, Examples) {
  const OrderedSpace s = four_ray_space();
  const Band c1 = disjoint_complement(s, std::vector<VectorQ>{v(1)});
  EXPECT_EQ(c1.carrier, span_of({v(3)}, 3));
  EXPECT_EQ(c1.zero_set, (IndexSet{1, 2}));
  for (std::size_t k = 1; k <= 4; ++k)
    EXPECT_EQ(disjoint_complement(s, std::vector<VectorQ>{v(k)}).carrier, span_of({v((k + 1) % 4 + 1)}, 3));
  EXPECT_EQ(disjoint_complement(simplex_space(2), std::vector<VectorQ>{vec({1, 0})}).carrier, span_of({vec({0, 1})}, 2));
  EXPECT_EQ(disjoint_complement(s, span_of({v(1), v(3)}, 3)).carrier, Subspace::zero(3));
  EXPECT_EQ(disjoint_complement(s, std::vector<VectorQ>{}).carrier, Subspace::full(3));
}

TEST(Complement, ElementsAreDisjointFromEveryInput) {
  Rng rng(42);
  for (std::size_t round = 0; round < 30; ++round) {
    const OrderedSpace s = selftest::random_space(rng, round);
    const Subspace d = selftest::random_subspace(rng, s.dim());
    const Band c = disjoint_complement(s, d);
    for (const auto& x : d.basis())
      for (const auto& y : c.carrier.basis()) EXPECT_TRUE(disjoint_eq1_oracle(s, x, y));
    // Anything outside the complement fails disjointness with some input.
    for (const auto& e : s.cone().generators) {
      if (c.carrier.contains(e)) continue;
      bool some = false;
      for (const auto& x : d.basis()) some = some || !is_disjoint(s, x, e);
      EXPECT_TRUE(some);
    }
  }
}

TEST(BandOf, Examples) {
  const OrderedSpace s = four_ray_space();
  EXPECT_EQ(band_of(s, v(1)).carrier, span_of({v(1)}, 3));
  EXPECT_TRUE(band_of(s, v(1)).directed);
  EXPECT_EQ(band_of(simplex_space(2), vec({1, 0})).carrier, span_of({vec({1, 0})}, 2));
  EXPECT_EQ(band_of(s, add(v(1), v(2))).carrier, Subspace::full(3));
}

TEST(IsBand, Examples) {
  const OrderedSpace s = four_ray_space();
  EXPECT_TRUE(is_band(s, span_of({v(1)}, 3)));
  EXPECT_FALSE(is_band(s, span_of({v(1), v(3)}, 3)));
  EXPECT_TRUE(is_band(s, Subspace::zero(3)));
  EXPECT_TRUE(is_band(s, Subspace::full(3)));
}

TEST(BandCalculus, RandomSubspaces) {
  Rng rng(43);
  for (std::size_t round = 0; round < 60; ++round) {
    const OrderedSpace s = selftest::random_space(rng, round);
    const Subspace d = selftest::random_subspace(rng, s.dim());
    const Subspace d1 = disjoint_complement(s, d).carrier;
    const Subspace d2 = disjoint_complement(s, d1).carrier;
    const Subspace d3 = disjoint_complement(s, d2).carrier;
    EXPECT_TRUE(d2.contains(d));
    EXPECT_EQ(d1, d3);
    EXPECT_TRUE(is_band(s, d1));
    EXPECT_EQ(is_band(s, d), d2 == d);
  }
}

TEST(EnumerateBands, FourRay) {
  const OrderedSpace s = four_ray_space();
  const auto bands = enumerate_bands(s);
  std::vector<Subspace> directed;
  std::vector<Subspace> other;
  for (const auto& b : bands) (b.directed ? directed : other).push_back(b.carrier);
  ASSERT_EQ(directed.size(), 6u);
  EXPECT_EQ(directed[0], Subspace::zero(3));
  EXPECT_EQ(directed[5], Subspace::full(3));
  for (std::size_t k = 1; k <= 4; ++k)
    EXPECT_NE(std::find(directed.begin(), directed.end(), span_of({v(k)}, 3)), directed.end());
  // The two remaining bands are lines without positive vectors; each is the
  // disjoint complement of the other.
  ASSERT_EQ(other.size(), 2u);
  EXPECT_EQ(other[0], span_of({vec({1, -1, 0})}, 3));
  EXPECT_EQ(other[1], span_of({vec({1, 1, 0})}, 3));
  EXPECT_TRUE(disjoint_eq1_oracle(s, vec({1, -1, 0}), vec({1, 1, 0})));
  EXPECT_EQ(disjoint_complement(s, other[0]).carrier, other[1]);
  EXPECT_EQ(oracle_apply(four_ray_facets(), vec({1, -1, 0})), vec({0, 2, 0, -2}));
  EXPECT_EQ(oracle_apply(four_ray_facets(), vec({1, 1, 0})), vec({-2, 0, 2, 0}));
}

TEST(EnumerateBands, SimplexAndCap) {
  EXPECT_EQ(enumerate_bands(simplex_space(3)).size(), 8u);
  const auto one = enumerate_bands(simplex_space(1));
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].carrier, Subspace::zero(1));
  EXPECT_EQ(one[1].carrier, Subspace::full(1));
  expect_error(Errc::CapExceeded, [] { enumerate_bands(four_ray_space(), 3); });
}

TEST(EnumerateBands, EveryCoordinateKernelBandIsListed) {
  Rng rng(44);
  for (std::size_t round = 0; round < 10; ++round) {
    const OrderedSpace s = selftest::random_space(rng, round);
    const auto bands = enumerate_bands(s);
    for (const auto& b : bands) {
      EXPECT_TRUE(is_band(s, b.carrier));
      EXPECT_EQ(b.directed, is_directed_subspace(s, b.carrier));
    }
    const Subspace d = selftest::random_subspace(rng, s.dim());
    const Subspace c = disjoint_complement(s, d).carrier;
    EXPECT_TRUE(std::any_of(bands.begin(), bands.end(), [&](const Band& b) { return b.carrier == c; }));
  }
}

TEST(PrincipalIdeal, Examples) {
  const OrderedSpace s = four_ray_space();
  EXPECT_FALSE(principal_ideal_member(simplex_space(2), vec({0, 1}), vec({1, 0})));
  EXPECT_TRUE(principal_ideal_member(s, v(1), add(v(1), v(2))));
  EXPECT_FALSE(principal_ideal_member(s, v(2), v(1)));
}

TEST(PrincipalIdeal, AtomIdealsAreLinesInSimplicialSpaces) {
  Rng rng(45);
  for (int round = 0; round < 20; ++round) {
    const OrderedSpace s = selftest::random_simplicial_space(rng, 4);
    for (const auto& a : atoms(s)) {
      EXPECT_TRUE(principal_ideal_member(s, scale(-3, a), a));
      for (int t = 0; t < 5; ++t) {
        const VectorQ x = selftest::random_vector(rng, s.dim(), 2);
        EXPECT_EQ(principal_ideal_member(s, x, a), span_of({a}, s.dim()).contains(x));
      }
    }
  }
}

TEST(Directed, Examples) {
  const OrderedSpace s = four_ray_space();
  EXPECT_TRUE(is_directed_subspace(s, span_of({v(1)}, 3)));
  EXPECT_TRUE(is_directed_subspace(s, span_of({v(1), v(3)}, 3)));
  EXPECT_FALSE(is_directed_subspace(simplex_space(2), span_of({vec({1, -1})}, 2)));
  EXPECT_FALSE(is_directed_subspace(s, span_of({vec({1, 1, 0})}, 3)));
}

TEST(ExtendRestrict, Examples) {
  const OrderedSpace s = four_ray_space();
  EXPECT_EQ(extend_band(s, band_of(s, v(1))), (IndexSet{1, 2}));
  EXPECT_EQ(extend_band(s, make_band(s, Subspace::full(3))), (IndexSet{0, 1, 2, 3}));
  const OrderedSpace q3 = simplex_space(3);
  EXPECT_EQ(extend_band(q3, make_band(q3, span_of({vec({1, 0, 0}), vec({0, 0, 1})}, 3))), (IndexSet{0, 2}));
  EXPECT_EQ(restrict_band(s, {1, 2}), span_of({v(1)}, 3));
  EXPECT_EQ(restrict_band(s, {0, 1, 2, 3}), Subspace::full(3));
  EXPECT_EQ(restrict_band(s, {2}), Subspace::zero(3));
}

TEST(ExtendRestrict, RoundTrips) {
  Rng rng(46);
  for (std::size_t round = 0; round < 30; ++round) {
    const OrderedSpace s = selftest::random_space(rng, round);
    const bool pervasive = classify(s).is_pervasive;
    for (const auto& b : enumerate_bands(s)) {
      const IndexSet j = extend_band(s, b);
      if (is_band(s, restrict_band(s, j))) EXPECT_EQ(restrict_band(s, j), b.carrier);
      if (!pervasive) continue;
      EXPECT_EQ(restrict_band(s, j), b.carrier);
      const Band c = disjoint_complement(s, b.carrier);
      EXPECT_EQ(extend_band(s, c), complement(j, s.facet_count()));
    }
    if (is_fordable(s)) {
      for (int t = 0; t < 10; ++t) {
        IndexSet j;
        for (std::size_t k = 0; k < s.facet_count(); ++k)
          if (selftest::uniform(rng, 0, 1)) j.push_back(k);
        EXPECT_TRUE(is_band(s, restrict_band(s, j)));
        if (pervasive) EXPECT_EQ(extend_band(s, make_band(s, restrict_band(s, j))), j);
      }
    }
  }
}

TEST(ExtendRestrict, FourRayRestrictionsMatchDoubleComplement) {
  const OrderedSpace s = four_ray_space();
  for (std::size_t code = 0; code < 16; ++code) {
    IndexSet j;
    for (std::size_t k = 0; k < 4; ++k)
      if (code & (std::size_t{1} << k)) j.push_back(k);
    const Subspace r = restrict_band(s, j);
    for (const auto& x : r.basis()) EXPECT_TRUE(std::ranges::includes(j, support(embed(s, x))));
    EXPECT_EQ(is_band(s, r), dd(s, r) == r);
  }
}

TEST(Bands, SupremumOfDisjointSetStaysDisjoint) {
  Rng rng(47);
  int checked = 0;
  for (int round = 0; round < 30; ++round) {
    const OrderedSpace s = selftest::random_simplicial_space(rng, 5);
    const auto rays = atoms(s);
    const VectorQ a = rays[0];
    std::vector<VectorQ> set;
    for (std::size_t k = 1; k < rays.size() && set.size() < 3; ++k) {
      VectorQ x = zero_vector(s.dim());
      for (std::size_t r = 1; r < rays.size(); ++r) x = add(x, scale(selftest::uniform(rng, -2, 2), rays[r]));
      set.push_back(x);
    }
    if (set.empty()) continue;
    const auto sup = sup_in_x(s, set);
    ASSERT_TRUE(sup.has_value());
    for (const auto& x : set) ASSERT_TRUE(is_disjoint(s, a, x));
    EXPECT_TRUE(is_disjoint(s, a, *sup));
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace ordercone::testing
