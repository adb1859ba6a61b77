#include "ordercone/completion.hpp"

#include <stdexcept>

#include "ordercone/cone.hpp"
#include "ordercone/error.hpp"

namespace ordercone {

namespace {

// {z : F z >= upper} ⊆ {z : F z >= lower}
bool upper_set_within(const OrderedSpace& s, const VectorQ& upper, const VectorQ& lower) {
  const Polyhedron p{s.functionals(), upper};
  for (std::size_t j = 0; j < s.facet_count(); ++j) {
    if (lower[j] <= upper[j]) continue;
    const LPOutcome o = lp(s.functionals().row(j), p, Sense::Minimize);
    if (std::get<Optimal>(o).value < lower[j]) return false;
  }
  return true;
}

}  // namespace

FunctionalRep make_functional_rep(MatrixQ f) {
  FunctionalRep rep;
  rep.range_relations = nullspace(f.transpose());
  rep.f = std::move(f);
  return rep;
}

CompletionElement embed(const OrderedSpace& s, const VectorQ& x) {
  if (x.size() != s.dim()) {
    throw Error(Errc::DimensionMismatch, "element of length " + std::to_string(x.size()) +
                                             " in a space of dimension " + std::to_string(s.dim()));
  }
  return s.functionals() * x;
}

bool in_range(const OrderedSpace& s, const CompletionElement& y) {
  if (y.size() != s.facet_count()) throw Error(Errc::DimensionMismatch, "cover element length");
  for (const auto& rel : s.completion().range_relations)
    if (dot(rel, y) != 0) return false;
  return true;
}

bool modulus_dominates(const OrderedSpace& s, const VectorQ& x, const VectorQ& y) {
  return upper_set_within(s, cw_abs(embed(s, y)), cw_abs(embed(s, x)));
}

std::vector<Rational> coordinate_infima(const OrderedSpace& s, const CompletionElement& y) {
  if (y.size() != s.facet_count()) throw Error(Errc::DimensionMismatch, "cover element length");
  const Polyhedron p{s.functionals(), y};
  std::vector<Rational> out;
  out.reserve(s.facet_count());
  for (std::size_t j = 0; j < s.facet_count(); ++j) {
    const LPOutcome o = lp(s.functionals().row(j), p, Sense::Minimize);
    const auto* opt = std::get_if<Optimal>(&o);
    if (!opt) throw std::logic_error("coordinate infimum over an upper set is not attained");
    out.push_back(opt->value);
  }
  return out;
}

bool order_density_at(const OrderedSpace& s, const CompletionElement& y) {
  const std::vector<Rational> inf = coordinate_infima(s, y);
  for (std::size_t j = 0; j < inf.size(); ++j)
    if (inf[j] != y[j]) return false;
  return true;
}

bool is_majorizing(const OrderedSpace& s, const Subspace& d, const IndexSet& j) {
  const std::size_t k = d.dim();
  const MatrixQ g = s.functionals() * from_columns(d.basis(), s.dim());
  PolyhedronBuilder pb(k);
  std::size_t next = 0;
  for (std::size_t row = 0; row < s.facet_count(); ++row) {
    const bool in_j = next < j.size() && j[next] == row;
    if (in_j) {
      ++next;
      pb.at_least(g.row(row), 1);
    } else {
      pb.equal(g.row(row), 0);
    }
  }
  return feasible_point(pb.build()).has_value();
}

}  // namespace ordercone
