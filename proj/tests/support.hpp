#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ordercone/ordercone.hpp"

namespace ordercone::testing {

using selftest::four_ray_facets;
using selftest::four_ray_generators;
using selftest::four_ray_space;
using selftest::Rng;
using selftest::simplex_space;
using selftest::vec;

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline Subspace span_of(std::vector<VectorQ> vs, std::size_t n) { return Subspace::span(vs, n); }

inline OrderedSpace space_from_generators(std::size_t n, std::vector<VectorQ> gens) {
  return build_space(n, std::move(gens), std::nullopt, "test");
}

/// Expects `fn` to throw ordercone::Error with the given code.
template <typename Fn>
void expect_error(Errc code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << errc_name(code) << ", nothing thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Independent oracles. None of them calls the LP kernel or the library's
// elimination routines.

/// Solves a square system by fraction Gaussian elimination; nullopt when singular.
std::optional<VectorQ> oracle_solve_square(std::vector<VectorQ> a, VectorQ b);

/// Every vertex of {x : A x >= b} by trying all n-subsets of rows.
std::vector<VectorQ> oracle_vertices(const MatrixQ& a, const VectorQ& b);

/// max c·x over the vertices of a bounded nonempty {A x >= b}; nullopt if no vertex.
std::optional<Rational> oracle_max(const VectorQ& c, const MatrixQ& a, const VectorQ& b);

/// x = sum_i t_i g_i with t >= 0, decided by trying every linearly
/// independent subset of generators of size rank (Carathéodory).
bool oracle_in_cone(const std::vector<VectorQ>& generators, const VectorQ& x);

/// F x with an explicit double loop.
VectorQ oracle_apply(const std::vector<VectorQ>& rows, const VectorQ& x);

}  // namespace ordercone::testing
