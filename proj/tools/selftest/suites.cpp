#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <sstream>

#include "fixtures.hpp"

namespace ordercone::selftest {

namespace {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      if (failures_.size() < 25) failures_.push_back(what);
      ++failed_;
    }
  }
  void fail(const std::string& what) { expect(false, what); }

  std::size_t checks() const { return checks_; }
  std::vector<std::string> take_failures() {
    if (failed_ > failures_.size()) {
      failures_.push_back("... " + std::to_string(failed_ - failures_.size()) + " more");
    }
    return std::move(failures_);
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string show(const VectorQ& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << to_string(v[i]);
  out << ')';
  return out.str();
}

std::vector<VectorQ> sorted_primitive(std::span<const VectorQ> vs) {
  std::vector<VectorQ> out;
  for (const auto& v : vs) out.push_back(primitive(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool same_ray_set(std::span<const VectorQ> a, std::span<const VectorQ> b) {
  return sorted_primitive(a) == sorted_primitive(b);
}

Subspace line(const VectorQ& v) { return Subspace::span(std::vector<VectorQ>{v}, v.size()); }

VectorQ combination(Rng& rng, std::span<const VectorQ> basis, std::size_t n, long bound = 3) {
  VectorQ v = zero_vector(n);
  for (const auto& b : basis) v = add(v, scale(uniform(rng, -bound, bound), b));
  return v;
}

// Greatest mu with mu * a <= x, for x >= 0 and a > 0.
Rational max_multiple_below(const OrderedSpace& s, const VectorQ& x, const VectorQ& a) {
  const VectorQ fx = embed(s, x);
  const VectorQ fa = embed(s, a);
  std::optional<Rational> best;
  for (std::size_t j = 0; j < fx.size(); ++j) {
    if (fa[j] > 0) {
      Rational r = fx[j] / fa[j];
      if (!best || r < *best) best = r;
    }
  }
  return best.value_or(0);
}

// max sum_j f_j(x) over 0 <= F x <= cap.
Rational mass_below(const OrderedSpace& s, const VectorQ& cap) {
  const MatrixQ& f = s.functionals();
  const Polyhedron p = PolyhedronBuilder(s.dim())
                           .rows_at_least(f, zero_vector(f.rows()))
                           .rows_at_most(f, cap)
                           .build();
  VectorQ objective = zero_vector(s.dim());
  for (std::size_t j = 0; j < f.rows(); ++j) objective = add(objective, f.row(j));
  const auto outcome = lp(objective, p, Sense::Maximize);
  return std::get<Optimal>(outcome).value;
}

bool valid_split(const OrderedSpace& s, const VectorQ& x1, const VectorQ& x2, const VectorQ& z,
                 const RdpSplit& split) {
  return add(split.first, split.second) == z && in_cone(s, split.first) && in_cone(s, split.second) &&
         leq(s, split.first, x1) && leq(s, split.second, x2);
}

struct RdpWitness {
  VectorQ x1, x2, z;
};

// Two extreme rays r_p, r_q and a third ray r_k with mu r_k <= r_p + r_q,
// mu > 0. Any split would put mu r_k in span{r_p, r_q} with nonnegative
// coefficients, which an extreme ray distinct from both cannot satisfy.
std::optional<RdpWitness> find_rdp_witness(const OrderedSpace& s) {
  const auto& rays = s.cone().generators;
  for (std::size_t p = 0; p < rays.size(); ++p) {
    for (std::size_t q = p + 1; q < rays.size(); ++q) {
      const VectorQ sum = add(rays[p], rays[q]);
      for (std::size_t k = 0; k < rays.size(); ++k) {
        if (k == p || k == q) continue;
        const Rational mu = max_multiple_below(s, sum, rays[k]);
        if (mu > 0) return RdpWitness{rays[p], rays[q], scale(mu, rays[k])};
      }
    }
  }
  return std::nullopt;
}

void four_ray_suite(Checker& c, const SuiteOptions& opt, Rng&) {
  const auto& v = four_ray_generators();
  const auto& f = four_ray_facets();
  std::vector<VectorQ> facets = f;
  if (opt.inject_corruption) facets[0] = vec({-1, -1, 2});
  const OrderedSpace s = build_space(3, v, facets, "four-ray");

  const OrderedSpace generated = build_space(3, v, std::nullopt, "four-ray-from-generators");
  c.expect(same_ray_set(generated.cone().facets, f), "facets computed from v1..v4 are f1..f4");
  const OrderedSpace from_facets = build_space(3, std::nullopt, f, "four-ray-from-facets");
  c.expect(same_ray_set(from_facets.cone().generators, v), "generators computed from f1..f4 are v1..v4");

  c.expect(same_ray_set(atoms(s), v), "atoms are v1..v4");

  for (std::size_t k = 0; k < 4; ++k) {
    const Band d = disjoint_complement(s, std::vector<VectorQ>{v[k]});
    c.expect(d.carrier == line(v[(k + 2) % 4]),
             "{v" + std::to_string(k + 1) + "}^d = span{v" + std::to_string((k + 2) % 4 + 1) + "}");
  }

  const VectorQ d = add(v[0], v[1]);
  c.expect(is_discrete(s, d), "v1+v2 is discrete");
  c.expect(!is_atom(s, d), "v1+v2 is not an atom");

  const auto bands = enumerate_bands(s);
  std::vector<Subspace> directed_nontrivial;
  std::size_t directed = 0;
  for (const auto& b : bands) {
    c.expect(is_band(s, b.carrier), "enumerated carrier passes is_band");
    if (!b.directed) {
      // The remaining bands are lines whose complements are lines, e.g.
      // (1,-1,0) and (1,1,0); confirm the disjointness from the upper-bound definition.
      c.expect(b.carrier.dim() == 1, "non-directed band is a line");
      const Band comp = disjoint_complement(s, b.carrier);
      c.expect(comp.carrier.dim() == 1 && !comp.directed, "complement of a non-directed line is one too");
      if (b.carrier.dim() == 1 && comp.carrier.dim() == 1) {
        c.expect(disjoint_eq1_oracle(s, b.carrier.basis()[0], comp.carrier.basis()[0]),
                 "non-directed band and its complement are disjoint by definition");
      }
      continue;
    }
    ++directed;
    if (b.carrier.dim() != 0 && b.carrier.dim() != 3) directed_nontrivial.push_back(b.carrier);
  }
  c.expect(directed == 6, "exactly 6 directed bands, found " + std::to_string(directed));
  c.expect(bands.size() == 8, "8 bands in total (6 directed and 2 non-directed lines), found " +
                                  std::to_string(bands.size()));
  std::vector<Subspace> expected_lines;
  for (const auto& g : v) expected_lines.push_back(line(g));
  const auto contains_all = [](const std::vector<Subspace>& a, const std::vector<Subspace>& b) {
    return std::all_of(b.begin(), b.end(), [&](const Subspace& x) {
      return std::find(a.begin(), a.end(), x) != a.end();
    });
  };
  c.expect(directed_nontrivial.size() == 4 && contains_all(directed_nontrivial, expected_lines),
           "the non-trivial directed bands are span{v1}..span{v4}");

  const auto projections = enumerate_order_projections(s);
  bool has_zero = false;
  bool has_identity = false;
  for (const auto& p : projections) {
    if (!p.matrix) continue;
    has_zero = has_zero || *p.matrix == MatrixQ(3, 3);
    has_identity = has_identity || *p.matrix == MatrixQ::identity(3);
  }
  c.expect(projections.size() == 2 && has_zero && has_identity, "order projections are exactly 0 and I");

  const Classification cl = classify(s);
  c.expect(!cl.is_lattice && !cl.is_pervasive && !cl.is_fordable && !cl.has_rdp,
           "lattice, pervasive, fordable and RDP are all false");
  c.expect(cl.atom_count == 4, "four atoms");
  c.expect(cl.weakly_pervasive.status == WeakStatus::Violated && cl.weakly_pervasive.certificate.has_value(),
           "weak pervasiveness is violated with a certificate");
  if (cl.weakly_pervasive.certificate) {
    const auto& [b, e] = *cl.weakly_pervasive.certificate;
    c.expect(in_cone(s, b) && !is_zero(b) && in_cone(s, e) && !is_zero(e), "certificate elements are > 0");
    c.expect(!is_disjoint(s, b, e) && !disjoint_eq1_oracle(s, b, e), "certificate elements are not disjoint");
    c.expect(mass_below(s, cw_min(embed(s, b), embed(s, e))) == 0, "[0,b] ∩ [0,d] = {0}");
    c.expect(b == v[0] && e == v[1], "certificate is (v1, v2), got " + show(b) + ", " + show(e));
  }

  const auto w = pervasive_witness_check(s, vec({-1, -1, -1}));
  c.expect(w.kind == PervasiveWitness::Kind::NoWitness, "b = (-1,-1,-1) admits no pervasive witness");
  c.expect(solve_linear(s.functionals(), vec({1, -1, -3, -1})) == vec({-1, -1, -1}),
           "F x = (1,-1,-3,-1) solves to x = (-1,-1,-1)");

  c.expect(!rdp_split(s, v[0], v[2], v[1]).has_value(), "v2 <= v1 + v3 has no Riesz split");
}

void simplicial_suite(Checker& c, const SuiteOptions&, Rng& rng) {
  for (int round = 0; round < 200; ++round) {
    const OrderedSpace s = random_simplicial_space(rng);
    const std::size_t n = s.dim();
    const Classification cl = classify(s);
    c.expect(cl.is_lattice && cl.is_pervasive && cl.is_fordable && cl.has_rdp &&
                 cl.weakly_pervasive.status == WeakStatus::Holds && cl.atom_count == n,
             s.name() + ": classification is all true");

    const VectorQ x = random_vector(rng, n);
    const VectorQ x_pos = random_cone_vector(rng, s);
    for (const auto& a : atoms(s)) {
      const AtomDecomposition dec = decompose_by_atom(s, x, a);
      c.expect(add(dec.atom_part, dec.disjoint_part) == x, "parts sum to x");
      c.expect(dec.atom_part == scale(dec.lambda, a), "atom part is lambda * a");
      c.expect(is_disjoint(s, dec.atom_part, dec.disjoint_part), "parts are disjoint");

      const AtomDecomposition pos = decompose_by_atom(s, x_pos, a);
      const Rational closed = atom_lambda(s, x_pos, a);
      const Rational by_lp = atom_lambda_by_lp(s, x_pos, a);
      c.expect(pos.lambda == closed && closed == by_lp,
               "alpha = closed-form lambda = LP lambda for x = " + show(x_pos) + ", a = " + show(a));
      c.expect(closed == max_multiple_below(s, x_pos, a), "lambda matches the facet ratio oracle");

      std::vector<VectorQ> columns;
      for (std::size_t k = 0; k < n; ++k) columns.push_back(decompose_by_atom(s, unit_vector(n, k), a).atom_part);
      const MatrixQ p = from_columns(columns, n);
      c.expect(p * p == p, "atom projection is idempotent");
      for (const auto& g : s.cone().generators) {
        c.expect(in_cone(s, p * g) && in_cone(s, sub(g, p * g)), "atom projection and complement are positive");
      }
      c.expect(p * x == dec.atom_part, "the projection matrix reproduces the atom part");
      c.expect(band_of(s, a).carrier == line(a), "band of an atom is its span");
    }

    const auto bands = enumerate_bands(s);
    c.expect(bands.size() == (std::size_t{1} << n), s.name() + ": 2^n bands");
    for (const auto& b : bands) {
      const bool pb = is_projection_band(s, b.carrier).is_projection_band;
      const bool pbd = is_projection_band(s, disjoint_complement(s, b.carrier).carrier).is_projection_band;
      c.expect(pb && pbd, "every band and its complement are projection bands");
    }
  }
}

void disjointness_suite(Checker& c, const SuiteOptions&, Rng& rng) {
  std::size_t disjoint = 0;
  std::size_t overlapping = 0;
  for (std::size_t round = 0; round < 50; ++round) {
    const OrderedSpace s = random_space(rng, round);
    const std::size_t n = s.dim();
    const std::size_t m = s.facet_count();
    const auto& gens = s.cone().generators;
    for (int pair = 0; pair < 500; ++pair) {
      VectorQ x;
      VectorQ y;
      switch (pair % 3) {
        case 0: {
          IndexSet j;
          for (std::size_t k = 0; k < m; ++k)
            if (uniform(rng, 0, 1)) j.push_back(k);
          x = combination(rng, coordinate_kernel(s, j).basis(), n);
          y = combination(rng, disjoint_complement(s, std::vector<VectorQ>{x}).carrier.basis(), n);
          break;
        }
        case 1: {
          const auto p = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(gens.size()) - 1));
          const auto q = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(gens.size()) - 1));
          x = scale(uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1), gens[p]);
          y = scale(uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1), gens[q]);
          break;
        }
        default:
          x = random_vector(rng, n, 2);
          y = random_vector(rng, n, 2);
      }
      const bool support_route = is_disjoint(s, x, y);
      const bool definition_route = disjoint_eq1_oracle(s, x, y);
      (support_route ? disjoint : overlapping) += 1;
      c.expect(support_route == definition_route,
               s.name() + ": routes disagree on x = " + show(x) + ", y = " + show(y));
    }
  }
  c.expect(disjoint > 0 && overlapping > 0, "both verdicts were exercised");
}

void band_calculus_suite(Checker& c, const SuiteOptions&, Rng& rng) {
  for (std::size_t round = 0; round < 20; ++round) {
    const OrderedSpace s = random_space(rng, round);
    const std::size_t n = s.dim();
    const auto& gens = s.cone().generators;
    for (int k = 0; k < 5; ++k) {
      Subspace d;
      if (k % 3 == 0) {
        d = random_subspace(rng, n);
      } else if (k % 3 == 1) {
        std::vector<VectorQ> chosen;
        for (const auto& g : gens)
          if (uniform(rng, 0, 2) == 0) chosen.push_back(g);
        d = Subspace::span(chosen, n);
      } else {
        IndexSet j;
        for (std::size_t t = 0; t < s.facet_count(); ++t)
          if (uniform(rng, 0, 1)) j.push_back(t);
        d = coordinate_kernel(s, j);
      }
      const Band dd1 = disjoint_complement(s, d);
      const Band dd2 = disjoint_complement(s, dd1.carrier);
      const Band dd3 = disjoint_complement(s, dd2.carrier);
      c.expect(dd2.carrier.contains(d), s.name() + ": D ⊆ D^dd");
      c.expect(dd3.carrier == dd1.carrier, s.name() + ": D^d = D^ddd");
      c.expect(is_band(s, dd1.carrier) && is_band(s, dd2.carrier), s.name() + ": complements are bands");
      c.expect(is_band(s, d) == (dd2.carrier == d), s.name() + ": is_band agrees with D = D^dd");
    }
  }
}

void lattice_rdp_suite(Checker& c, const SuiteOptions&, Rng& rng) {
  for (std::size_t round = 0; round < 100; ++round) {
    const OrderedSpace s = random_space(rng, round);
    const Classification cl = classify(s);
    c.expect(cl.is_lattice == cl.is_pervasive && cl.is_pervasive == cl.has_rdp,
             s.name() + ": lattice, pervasive and RDP agree");
    const auto rays = atoms(s);
    const bool simplicial = rays.size() == s.dim() && rank(rays, s.dim()) == s.dim();
    c.expect(cl.is_lattice == simplicial, s.name() + ": lattice iff simplicial");
    if (cl.is_pervasive) c.expect(cl.is_fordable, s.name() + ": pervasive implies fordable");

    for (int probe = 0; probe < 20; ++probe) {
      const VectorQ x1 = random_cone_vector(rng, s);
      const VectorQ x2 = random_cone_vector(rng, s);
      const VectorQ sum = add(x1, x2);
      VectorQ z;
      if (probe % 2 == 0) {
        const auto& g = rays[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rays.size()) - 1))];
        z = scale(max_multiple_below(s, sum, g), g);
      } else {
        z = scale(make_rational(uniform(rng, 0, 4), 4), sum);
      }
      const auto split = rdp_split(s, x1, x2, z);
      if (split) c.expect(valid_split(s, x1, x2, z, *split), s.name() + ": returned split is valid");
      if (cl.has_rdp) c.expect(split.has_value(), s.name() + ": RDP space splits every probe");
    }

    if (!cl.has_rdp) {
      const auto witness = find_rdp_witness(s);
      c.expect(witness.has_value(), s.name() + ": non-RDP space has a stored witness triple");
      if (witness) {
        c.expect(!rdp_split(s, witness->x1, witness->x2, witness->z).has_value(),
                 s.name() + ": witness triple has no split");
      }
    }
  }
  const OrderedSpace four = four_ray_space();
  const auto& v = four_ray_generators();
  c.expect(!classify(four).has_rdp, "four-ray has no RDP");
  c.expect(!rdp_split(four, v[0], v[2], v[1]).has_value(), "four-ray witness (v1, v3, v2) has no split");
}

void extension_suite(Checker& c, const SuiteOptions&, Rng& rng) {
  for (int round = 0; round < 30; ++round) {
    const OrderedSpace s = random_simplicial_space(rng, 5);
    const std::size_t m = s.facet_count();
    for (const auto& b : enumerate_bands(s)) {
      const IndexSet j = extend_band(s, b);
      const IndexSet jd = extend_band(s, disjoint_complement(s, b.carrier));
      c.expect(disjoint_sets(j, jd) && set_union(j, jd).size() == m,
               s.name() + ": extensions of B and B^d have complementary supports");
      c.expect(restrict_band(s, j) == b.carrier, s.name() + ": restrict(extend(B)) = B");
      c.expect(is_majorizing(s, b.carrier, j), s.name() + ": B majorizes its extension");
    }
  }
  const OrderedSpace four = four_ray_space();
  const auto& v = four_ray_generators();
  const Subspace r = restrict_band(four, IndexSet{1, 2});
  c.expect(r == line(v[0]), "four-ray: restrict({2,3}) = span{v1}");
  c.expect(!is_projection_band(four, r).is_projection_band, "four-ray: span{v1} is not a projection band");
  c.expect(extend_band(four, band_of(four, v[0])) == IndexSet{1, 2}, "four-ray: extend(span{v1}) = {2,3}");
}

void sequence_suite(Checker& c, const SuiteOptions&, Rng& rng) {
  using namespace ordercone::seq;
  for (int round = 0; round < 100; ++round) {
    const Index tail_start = uniform(rng, -4, 5);
    std::map<Index, Rational> entries;
    for (Index k = -7; k < tail_start; ++k)
      if (uniform(rng, 0, 2) == 0) entries[k] = make_rational(uniform(rng, -6, 6), uniform(rng, 1, 3));
    const Rational tail = make_rational(uniform(rng, -4, 4), uniform(rng, 1, 2));
    SeqElement raw(entries, tail_start, tail);
    // Repair membership at an index strictly below the tail and below 0.
    const Index fix = std::min<Index>(tail_start, 0) - 1 - uniform(rng, 0, 2);
    Rational weight(1);
    for (Index k = fix; k < 0; ++k) weight /= 2;
    entries[fix] += (tail - raw.negative_weighted_sum()) / weight;
    const SeqElement x(entries, tail_start, tail);
    c.expect(seq_is_member(x), "repaired sequence is a member");

    const auto [b, cpart] = seq_decompose_bc(x);
    c.expect(b + cpart == x, "b + c = x");
    c.expect(seq_in_subspace(b, Part::B) && seq_in_subspace(cpart, Part::C), "b ∈ B and c ∈ C");
    c.expect(b.at(-1) == 2 * x.tail_value(), "b_{-1} = 2 lim x_k");
    Rational lower_sum = 0;
    Rational w(1, 2);
    for (Index k = 1; k <= -x.lowest_index(); ++k, w /= 2)
      if (k >= 2) lower_sum += x.at(-k) * w;
    c.expect(cpart.at(-1) == -2 * lower_sum, "c_{-1} = -2 sum_{k>=2} x_{-k}/2^k");
  }

  const auto join = seq_join_in_c(x_n(1), x_n(2));
  const auto* witness = std::get_if<SeqWitness>(&join);
  const auto* nd = witness ? std::get_if<NonDirected>(witness) : nullptr;
  c.expect(nd && nd->infimum == Rational(3, 4), "x^(1), x^(2) have no upper bound in C, infimum 3/4");
  c.expect(nd && nd->infimum >= Rational(1, 2), "the certificate dominates 1/2 + 1/4 - 2/8");

  const auto bc = seq_b_complement_witness();
  const auto* idx = std::get_if<NonDisjoint>(&bc);
  c.expect(idx && idx->index == -1, "C ≠ B^d is witnessed at index -1");
  c.expect(sample_b().at(-1) == 1 && x_n(1).at(-1) == 1, "both witnesses equal 1 at index -1");
  c.expect(std::holds_alternative<NonPervasive>(seq_nonpervasive_witness()), "non-pervasiveness witness");

  for (int round = 0; round < 100; ++round) {
    auto random_b = [&] {
      const Index tail_start = uniform(rng, 0, 4);
      std::map<Index, Rational> e;
      for (Index k = 0; k < tail_start; ++k) e[k] = uniform(rng, -5, 5);
      const Rational limit = make_rational(uniform(rng, -5, 5), uniform(rng, 1, 3));
      e[-1] = 2 * limit;
      return SeqElement(e, tail_start, limit);
    };
    const SeqElement a = random_b();
    const SeqElement b = random_b();
    const SeqElement upper = pointwise_max(a, b);
    c.expect(seq_is_member(upper) && seq_in_subspace(upper, Part::B), "pointwise max of B elements lies in B");
    c.expect(pointwise_leq(a, upper) && pointwise_leq(b, upper), "pointwise max bounds both");
  }
}

void sup_suite(Checker& c, const SuiteOptions&, Rng& rng) {
  const OrderedSpace four = four_ray_space();
  const auto& v = four_ray_generators();
  c.expect(sup_in_x(four, std::vector<VectorQ>{v[0], v[2]}) == vec({0, 0, 2}), "four-ray: sup{v1,v3} = (0,0,2)");
  c.expect(!sup_in_x(four, std::vector<VectorQ>{v[0], v[1]}).has_value(), "four-ray: sup{v1,v2} does not exist");

  for (int round = 0; round < 40; ++round) {
    const OrderedSpace s = random_simplicial_space(rng, 5);
    std::vector<VectorQ> m;
    const auto count = uniform(rng, 1, 4);
    for (long k = 0; k < count; ++k) m.push_back(random_vector(rng, s.dim()));
    VectorQ top = embed(s, m.front());
    for (const auto& x : m) top = cw_max(top, embed(s, x));
    const VectorQ expected = *inverse(s.functionals()) * top;
    c.expect(sup_in_x(s, m) == expected, s.name() + ": sup is the pulled-back componentwise max");
    c.expect(upper_bound_polyhedron(s, m).contains(expected), s.name() + ": sup is an upper bound");
  }
}

void atom_suite(Checker& c, const SuiteOptions&, Rng& rng) {
  for (std::size_t round = 0; round < 40; ++round) {
    const OrderedSpace s = random_space(rng, round);
    const auto rays = atoms(s);
    for (const auto& a : rays) c.expect(is_discrete(s, a), s.name() + ": atom " + show(a) + " is discrete");
    if (!classify(s).is_lattice) continue;

    for (int probe = 0; probe < 10; ++probe) {
      const VectorQ x = random_cone_vector(rng, s, 2);
      if (is_zero(x)) continue;
      c.expect(is_discrete(s, x) == is_atom(s, x), s.name() + ": discrete iff atom at " + show(x));
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      for (std::size_t j = i + 1; j < rays.size(); ++j) {
        const bool independent = rank(std::vector<VectorQ>{rays[i], rays[j]}, s.dim()) == 2;
        c.expect(is_disjoint(s, rays[i], rays[j]) == independent, s.name() + ": atoms disjoint iff independent");
      }
    }
    c.expect(rank(rays, s.dim()) == rays.size(), s.name() + ": pairwise independent atoms are independent");
    const auto inv = *inverse(s.functionals());
    for (std::size_t j = 0; j < s.facet_count(); ++j) {
      c.expect(is_atom(s, inv * unit_vector(s.facet_count(), j)),
               s.name() + ": preimage of a coordinate atom is an atom");
    }
  }
}

using SuiteFn = std::function<void(Checker&, const SuiteOptions&, Rng&)>;

const std::vector<SuiteFn>& suite_bodies() {
  static const std::vector<SuiteFn> bodies{four_ray_suite,  simplicial_suite, disjointness_suite,
                                           band_calculus_suite, lattice_rdp_suite, extension_suite,
                                           sequence_suite,  sup_suite,        atom_suite};
  return bodies;
}

bool matches(const SuiteInfo& info, const std::string& filter) {
  return filter.empty() || filter == info.name || filter == std::to_string(info.id);
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog{
      {1, "four-ray", "four-ray golden values: facets, atoms, bands, projections, classification", 5},
      {2, "simplicial", "200 simplicial spaces: atom decompositions, projections, bands", 30},
      {3, "disjointness", "50 spaces x 500 pairs: support test agrees with the definition", 30},
      {4, "band-calculus", "100 subspaces: D ⊆ D^dd, D^d = D^ddd, complements are bands", 10},
      {5, "lattice-rdp", "100 cones: lattice, pervasive and RDP agree; split probes", 60},
      {6, "extension-restriction", "band extension and restriction", 5},
      {7, "sequence-space", "sequence space: B ⊕ C, non-directed C, C ≠ B^d", 5},
      {8, "sup-transfer", "suprema through the cover", 2},
      {9, "atom-discreteness", "atoms are discrete; discrete iff atom in lattices", 10},
  };
  return catalog;
}

std::vector<SuiteResult> run_suites(const SuiteOptions& options) {
  std::vector<SuiteResult> results;
  const auto& catalog = suite_catalog();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& info = catalog[i];
    if (!matches(info, options.filter)) continue;
    SuiteResult r;
    r.id = info.id;
    r.name = info.name;
    r.summary = info.summary;
    r.time_limit = info.time_limit;
    Checker checker;
    Rng rng(options.seed + static_cast<std::uint64_t>(info.id));
    const auto start = std::chrono::steady_clock::now();
    try {
      suite_bodies()[i](checker, options, rng);
    } catch (const std::exception& e) {
      checker.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.checks = checker.checks();
    r.failures = checker.take_failures();
    if (r.seconds > r.time_limit) {
      r.failures.push_back("time limit of " + std::to_string(r.time_limit) + " s exceeded");
    }
    r.passed = r.failures.empty();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ordercone::selftest
