#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "ordercone/ordercone.hpp"

namespace ordercone::selftest {

using Rng = std::mt19937_64;

VectorQ vec(std::initializer_list<long> entries);

/// v1..v4 of the four-ray cone, in order.
const std::vector<VectorQ>& four_ray_generators();
/// f1..f4, in order: f1 vanishes on v1, v2; f2 on v2, v3; f3 on v3, v4; f4 on v4, v1.
const std::vector<VectorQ>& four_ray_facets();
OrderedSpace four_ray_space();

/// Q^n with the standard cone.
OrderedSpace simplex_space(std::size_t n);

/// Standard cone under a random unimodular change of basis, 1 <= n <= max_dim.
OrderedSpace random_simplicial_space(Rng& rng, std::size_t max_dim = 6);

/// Cone over a random lattice polygon (dim 3) or polytope (dim 4) whose
/// vertices are in convex position, so every generator is extreme.
OrderedSpace random_polyhedral_space(Rng& rng);

/// Alternates between the two families above.
OrderedSpace random_space(Rng& rng, std::size_t index);

long uniform(Rng& rng, long lo, long hi);
VectorQ random_vector(Rng& rng, std::size_t n, long bound = 4);
/// Nonnegative integer combination of the generators, possibly zero.
VectorQ random_cone_vector(Rng& rng, const OrderedSpace& s, long bound = 3);
/// Random subspace of Q^n of random dimension 0..n.
Subspace random_subspace(Rng& rng, std::size_t n);

}  // namespace ordercone::selftest
