#include "ordercone/cone.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "ordercone/error.hpp"

namespace ordercone {

namespace {

struct Ray {
  VectorQ v;
  std::vector<bool> zero;   // rows (among those processed) vanishing on v
};

std::vector<std::size_t> first_independent_rows(const MatrixQ& a) {
  std::vector<std::size_t> chosen;
  std::vector<VectorQ> picked;
  for (std::size_t i = 0; i < a.rows() && chosen.size() < a.cols(); ++i) {
    picked.push_back(a.row(i));
    if (rank(picked, a.cols()) > chosen.size()) {
      chosen.push_back(i);
    } else {
      picked.pop_back();
    }
  }
  return chosen;
}

bool lex_less(const VectorQ& a, const VectorQ& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Keeps, in input order, one primitive representative of each vector that is
// a positive multiple of some element of `reference`.
std::vector<VectorQ> keep_matching(const std::vector<VectorQ>& input, const std::vector<VectorQ>& reference) {
  std::vector<VectorQ> out;
  for (const auto& v : input) {
    VectorQ p = primitive(v);
    const bool listed = std::any_of(reference.begin(), reference.end(),
                                    [&](const VectorQ& r) { return r == p; });
    const bool seen = std::any_of(out.begin(), out.end(), [&](const VectorQ& r) { return r == p; });
    if (listed && !seen) out.push_back(std::move(p));
  }
  return out;
}

bool same_set(std::vector<VectorQ> a, std::vector<VectorQ> b) {
  std::sort(a.begin(), a.end(), lex_less);
  std::sort(b.begin(), b.end(), lex_less);
  return a == b;
}

// pos(V) ∩ -pos(V) = {0} iff no nonzero nonnegative combination of V vanishes.
bool positive_hull_is_pointed(const std::vector<VectorQ>& gens, std::size_t dim) {
  const std::size_t k = gens.size();
  PolyhedronBuilder pb(k);
  for (std::size_t i = 0; i < dim; ++i) {
    VectorQ row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = gens[j][i];
    pb.equal(std::move(row), 0);
  }
  for (std::size_t j = 0; j < k; ++j) {
    pb.at_least(unit_vector(k, j), 0);
    pb.at_most(unit_vector(k, j), 1);
  }
  const LPOutcome o = lp(VectorQ(k, Rational(1)), pb.build(), Sense::Maximize);
  return std::get<Optimal>(o).value == 0;
}

// Every generator lies in the facet cone, every generator is extreme (n-1
// independent active facets) and every facet is supporting (n-1 independent
// generators on it).
void cross_validate(const ConeSpec& c) {
  const MatrixQ f = MatrixQ::from_rows(c.facets, c.dim);
  for (const auto& g : c.generators) {
    const VectorQ fg = f * g;
    if (!is_nonnegative(fg)) {
      throw Error(Errc::InconsistentRepresentation, "a generator violates a facet inequality");
    }
    std::vector<VectorQ> active;
    for (std::size_t j = 0; j < fg.size(); ++j)
      if (fg[j] == 0) active.push_back(c.facets[j]);
    if (rank(active, c.dim) + 1 != c.dim) {
      throw Error(Errc::InconsistentRepresentation, "a generator is not an extreme ray of the facet cone");
    }
  }
  for (const auto& h : c.facets) {
    std::vector<VectorQ> on_facet;
    for (const auto& g : c.generators)
      if (dot(h, g) == 0) on_facet.push_back(g);
    if (rank(on_facet, c.dim) + 1 != c.dim) {
      throw Error(Errc::InconsistentRepresentation, "a facet does not support the generator cone");
    }
  }
}

void check_lengths(const std::vector<VectorQ>& vs, std::size_t dim, const char* what) {
  for (const auto& v : vs) {
    if (v.size() != dim) {
      throw Error(Errc::DimensionMismatch, std::string(what) + " of length " + std::to_string(v.size()) +
                                               " in dimension " + std::to_string(dim));
    }
  }
}

std::vector<VectorQ> nonzero_only(std::vector<VectorQ> vs) {
  std::erase_if(vs, [](const VectorQ& v) { return is_zero(v); });
  return vs;
}

}  // namespace

std::vector<VectorQ> extreme_rays(const MatrixQ& a) {
  const std::size_t n = a.cols(), m = a.rows();
  const std::vector<std::size_t> init = first_independent_rows(a);
  if (init.size() < n) {
    throw Error(Errc::NotPointed, "constraint matrix has rank " + std::to_string(init.size()) +
                                      " < " + std::to_string(n) + "; the cone contains a line");
  }
  const MatrixQ inv = *inverse(a.select_rows(init));

  std::vector<Ray> rays;
  for (std::size_t k = 0; k < n; ++k) {
    Ray r{primitive(inv.column(k)), std::vector<bool>(m, false)};
    for (std::size_t t = 0; t < n; ++t)
      if (t != k) r.zero[init[t]] = true;
    rays.push_back(std::move(r));
  }

  std::vector<bool> done(m, false);
  for (auto i : init) done[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (done[i]) continue;
    const VectorQ& row = a.row(i);
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(row, rays[k].v);
      if (val[k] > 0) pos.push_back(k);
      else if (val[k] < 0) neg.push_back(k);
    }

    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] < 0) continue;
      Ray r = rays[k];
      if (val[k] == 0) r.zero[i] = true;
      next.push_back(std::move(r));
    }
    for (auto p : pos) {
      for (auto q : neg) {
        std::vector<std::size_t> common;
        for (std::size_t t = 0; t < m; ++t)
          if (done[t] && rays[p].zero[t] && rays[q].zero[t]) common.push_back(t);
        if (n >= 2 && common.size() + 2 < n) continue;
        if (n < 2 || rank(a.select_rows(common)) + 2 != n) continue;
        VectorQ w = sub(scale(val[p], rays[q].v), scale(val[q], rays[p].v));
        Ray r{primitive(w), std::vector<bool>(m, false)};
        for (auto t : common) r.zero[t] = true;
        r.zero[i] = true;
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    done[i] = true;
  }

  std::vector<VectorQ> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

OrderedSpace build_space(std::size_t dim, std::optional<std::vector<VectorQ>> generators,
                         std::optional<std::vector<VectorQ>> facets, std::string name) {
  if (dim == 0) throw Error(Errc::EmptyInput, "dimension must be at least 1");
  if (!generators && !facets) throw Error(Errc::EmptyInput, "neither generators nor facets supplied");
  if (generators) check_lengths(*generators, dim, "generator");
  if (facets) check_lengths(*facets, dim, "facet");

  ConeSpec cone;
  cone.dim = dim;

  if (generators) {
    std::vector<VectorQ> gens = nonzero_only(*generators);
    if (gens.empty()) throw Error(Errc::EmptyInput, "no nonzero generators");
    if (!positive_hull_is_pointed(gens, dim)) {
      throw Error(Errc::NotPointed, "a nonzero nonnegative combination of the generators vanishes");
    }
    if (rank(gens, dim) < dim) {
      throw Error(Errc::NotGenerating, "generators span a proper subspace; the space is not directed");
    }
    std::vector<VectorQ> computed_facets = extreme_rays(MatrixQ::from_rows(gens, dim));
    std::vector<VectorQ> computed_rays = extreme_rays(MatrixQ::from_rows(computed_facets, dim));
    for (const auto& r : computed_rays) {
      const bool from_input = std::any_of(gens.begin(), gens.end(), [&](const VectorQ& g) {
        return positive_multiple(g, r).has_value();
      });
      if (!from_input) throw std::logic_error("double description produced a ray not among the generators");
    }
    cone.generators = keep_matching(gens, computed_rays);

    if (facets) {
      // Redundant but valid supplied inequalities are dropped.
      std::vector<VectorQ> given = nonzero_only(*facets);
      for (const auto& h : given) {
        for (const auto& g : gens) {
          if (dot(h, g) < 0) {
            throw Error(Errc::InconsistentRepresentation,
                        "a supplied facet inequality is violated by a generator");
          }
        }
      }
      std::vector<VectorQ> kept = keep_matching(given, computed_facets);
      if (!same_set(kept, computed_facets)) {
        throw Error(Errc::InconsistentRepresentation,
                    "supplied facets do not include every facet of the generator cone");
      }
      cone.facets = std::move(kept);
    } else {
      std::sort(computed_facets.begin(), computed_facets.end(), lex_less);
      cone.facets = std::move(computed_facets);
    }
  } else {
    std::vector<VectorQ> hs = nonzero_only(*facets);
    if (hs.empty() || rank(hs, dim) < dim) {
      throw Error(Errc::NotPointed, "facet functionals have a common kernel; the cone contains a line");
    }
    std::vector<VectorQ> rays = extreme_rays(MatrixQ::from_rows(hs, dim));
    if (rank(rays, dim) < dim) {
      throw Error(Errc::NotGenerating, "the cone is not full-dimensional; the space is not directed");
    }
    const std::vector<VectorQ> irredundant = extreme_rays(MatrixQ::from_rows(rays, dim));
    cone.facets = keep_matching(hs, irredundant);
    std::sort(rays.begin(), rays.end(), lex_less);
    cone.generators = std::move(rays);
  }

  cross_validate(cone);
  FunctionalRep rep = make_functional_rep(MatrixQ::from_rows(cone.facets, dim));
  return OrderedSpace(std::move(name), std::move(cone), std::move(rep));
}

bool in_cone(const OrderedSpace& s, const VectorQ& x) { return is_nonnegative(s.functionals() * x); }

bool leq(const OrderedSpace& s, const VectorQ& x, const VectorQ& y) { return in_cone(s, sub(y, x)); }

Polyhedron upper_bound_polyhedron(const OrderedSpace& s, std::span<const VectorQ> m) {
  if (m.empty()) throw Error(Errc::EmptyInput, "upper bounds of an empty set");
  VectorQ w = s.functionals() * m.front();
  for (std::size_t k = 1; k < m.size(); ++k) w = cw_max(w, s.functionals() * m[k]);
  return Polyhedron{s.functionals(), std::move(w)};
}

std::optional<VectorQ> pull_back(const OrderedSpace& s, const CompletionElement& y) {
  if (!in_range(s, y)) return std::nullopt;
  return solve_linear(s.functionals(), y);
}

std::optional<VectorQ> sup_in_x(const OrderedSpace& s, std::span<const VectorQ> m) {
  const Polyhedron upper = upper_bound_polyhedron(s, m);
  if (auto direct = pull_back(s, upper.b)) return direct;
  // Otherwise a least upper bound exists iff the per-coordinate minima over
  // M^u are attained by one point.
  const std::vector<Rational> minima = coordinate_infima(s, upper.b);
  return pull_back(s, VectorQ(minima.begin(), minima.end()));
}

}  // namespace ordercone
