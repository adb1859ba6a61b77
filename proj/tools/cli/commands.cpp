#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI/CLI.hpp>

#include "suites.hpp"

namespace ordercone::cli {

namespace {

struct VerbInfo {
  const char* name;
  const char* help;
  bool needs_space;
  std::size_t min_args;
  std::size_t max_args;
};

constexpr std::size_t kMany = static_cast<std::size_t>(-1);

const std::vector<VerbInfo>& verb_table() {
  static const std::vector<VerbInfo> table{
      {"classify", "lattice / pervasive / fordable / weakly pervasive / RDP verdicts", true, 0, 0},
      {"atoms", "extreme rays; with vectors, atom and discreteness tests", true, 0, kMany},
      {"disjoint", "disjointness of X Y by the cover and by the definition", true, 2, 2},
      {"dcomp", "disjoint complement of the given vectors", true, 0, kMany},
      {"band", "principal band of A, or band analysis of a spanned subspace", true, 1, kMany},
      {"bands", "every band of the space", true, 0, 0},
      {"projections", "every order projection of the space", true, 0, 0},
      {"lambda", "greatest mu with mu*A <= X for an atom A", true, 2, 2},
      {"decompose", "X = alpha*A + W with W disjoint from the atom A", true, 2, 2},
      {"rdp", "Riesz split of Z <= X1 + X2", true, 3, 3},
      {"sup", "upper bounds and supremum of the given vectors", true, 1, kMany},
      {"extend", "support of the extension to the cover of the band spanned by the vectors", true, 0, kMany},
      {"restrict", "restriction of the cover band with support J (JSON array, 1-based)", true, 1, 1},
      {"seq-demo", "sequence-space certificates", false, 0, 0},
      {"selftest", "run the acceptance suites", false, 0, 0},
  };
  return table;
}

const VerbInfo& verb_info(const std::string& verb) {
  for (const auto& v : verb_table())
    if (verb == v.name) return v;
  throw UsageError("unknown verb: " + verb);
}

OrderedSpace load_space(const Command& cmd) {
  if (cmd.example && cmd.space) throw UsageError("--example and --space are mutually exclusive");
  if (cmd.example) return builtin_space(*cmd.example);
  if (cmd.space) return space_from_file(*cmd.space);
  throw UsageError(cmd.verb + " requires --example NAME or --space FILE");
}

VectorQ vector_arg(const std::string& text, std::size_t dim) {
  VectorQ v;
  try {
    v = parse_vector_arg(text);
  } catch (const Error& e) {
    throw UsageError("cannot read vector argument '" + text + "': " + e.what());
  }
  if (v.size() != dim) {
    throw Error(Errc::DimensionMismatch, "vector " + text + " has " + std::to_string(v.size()) +
                                             " entries, the space has dimension " + std::to_string(dim));
  }
  return v;
}

std::vector<VectorQ> vector_args(const std::vector<std::string>& texts, std::size_t dim) {
  std::vector<VectorQ> out;
  for (const auto& t : texts) out.push_back(vector_arg(t, dim));
  return out;
}

Json vectors_json(const std::vector<VectorQ>& vs) { return to_json(std::span<const VectorQ>(vs)); }

Json projection_json(const ProjectionReport& r) {
  return Json{{"band", to_json(r.band)},
              {"projectionBand", r.is_projection_band},
              {"matrix", r.matrix ? to_json(*r.matrix) : Json(nullptr)}};
}

// Every {-1,0,1} pattern for small m, the signed unit vectors otherwise.
std::vector<CompletionElement> density_grid(std::size_t m) {
  std::vector<CompletionElement> grid;
  if (m <= 8) {
    std::size_t total = 1;
    for (std::size_t j = 0; j < m; ++j) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      CompletionElement y(m);
      std::size_t c = code;
      for (std::size_t j = 0; j < m; ++j, c /= 3) y[j] = static_cast<long>(c % 3) - 1;
      grid.push_back(std::move(y));
    }
  } else {
    for (std::size_t j = 0; j < m; ++j) {
      grid.push_back(unit_vector(m, j));
      grid.push_back(negate(unit_vector(m, j)));
    }
  }
  return grid;
}

Json run_classify(const OrderedSpace& s, const Command& cmd) {
  Json result = to_json(classify(s));
  if (!cmd.probes.empty()) {
    Json probes = Json::array();
    for (const auto& text : cmd.probes) {
      const VectorQ b = vector_arg(text, s.dim());
      const PervasiveWitness w = pervasive_witness_check(s, b);
      const char* kind = w.kind == PervasiveWitness::Kind::Witness     ? "witness"
                         : w.kind == PervasiveWitness::Kind::NoWitness ? "noWitness"
                                                                       : "inapplicable";
      probes.push_back(Json{{"b", to_json(b)}, {"outcome", kind}, {"point", w.point ? to_json(*w.point) : Json(nullptr)}});
    }
    result["probes"] = probes;
  }
  if (cmd.density) {
    std::size_t dense = 0;
    const auto grid = density_grid(s.facet_count());
    Json failures = Json::array();
    for (const auto& y : grid) {
      if (order_density_at(s, y)) {
        ++dense;
      } else {
        failures.push_back(to_json(y));
      }
    }
    result["orderDensity"] = Json{{"points", grid.size()}, {"dense", dense}, {"failures", failures}};
  }
  return result;
}

Json run_atoms(const OrderedSpace& s, const std::vector<VectorQ>& xs) {
  const auto rays = atoms(s);
  Json result{{"count", rays.size()}, {"atoms", vectors_json(rays)}};
  if (!xs.empty()) {
    Json queries = Json::array();
    for (const auto& x : xs) {
      const bool positive = in_cone(s, x) && !is_zero(x);
      queries.push_back(Json{{"x", to_json(x)},
                             {"atom", is_atom(s, x)},
                             {"discrete", positive ? Json(is_discrete(s, x)) : Json(nullptr)}});
    }
    result["queries"] = queries;
  }
  return result;
}

Json run_disjoint(const OrderedSpace& s, const VectorQ& x, const VectorQ& y) {
  return Json{{"disjoint", is_disjoint(s, x, y)},
              {"definitionCheck", disjoint_eq1_oracle(s, x, y)},
              {"embedX", to_json(embed(s, x))},
              {"embedY", to_json(embed(s, y))},
              {"xLeqY", leq(s, x, y)},
              {"yLeqX", leq(s, y, x)},
              {"modulusDominates", Json{{"xy", modulus_dominates(s, x, y)}, {"yx", modulus_dominates(s, y, x)}}},
              {"principalIdeal",
               Json{{"xInIdealOfY", principal_ideal_member(s, x, y)}, {"yInIdealOfX", principal_ideal_member(s, y, x)}}}};
}

Json run_band(const OrderedSpace& s, const Command& cmd, const std::vector<VectorQ>& xs) {
  if (!cmd.subspace && xs.size() == 1 && cmd.with.empty()) {
    const Band b = band_of(s, xs.front());
    return Json{{"band", to_json(b)}, {"projection", projection_json(is_projection_band(s, b.carrier))}};
  }
  const Subspace d = Subspace::span(xs, s.dim());
  const bool band = is_band(s, d);
  Json result{{"subspace", to_json(d)},
              {"isBand", band},
              {"directed", is_directed_subspace(s, d)},
              {"coordinateIdeal", is_coordinate_ideal(s, d)},
              {"complement", to_json(disjoint_complement(s, d))},
              {"bandHull", to_json(disjoint_complement(s, disjoint_complement(s, d).carrier))}};
  result["projection"] = band ? projection_json(is_projection_band(s, d)) : Json(nullptr);
  if (!cmd.with.empty()) {
    const Subspace other = Subspace::span(vector_args(cmd.with, s.dim()), s.dim());
    const auto v = check_ideal_decomposition(s, d, other);
    result["idealDecomposition"] =
        Json{{"outcome", v.outcome == IdealDecompositionVerdict::Outcome::Confirmed ? "confirmed" : "hypothesesNotMet"},
             {"tier", v.tier},
             {"failingCondition", v.failing_condition},
             {"complementMatches", v.complement_matches},
             {"projectionBand", v.b_is_projection_band}};
  }
  return result;
}

Json run_seq_demo() {
  using namespace ordercone::seq;
  Json result = Json::object();
  const SeqElement x1 = x_n(1);
  const SeqElement x2 = x_n(2);
  const auto join = seq_join_in_c(x1, x2);
  Json nd{{"x", to_json(x1)}, {"y", to_json(x2)}};
  if (const auto* w = std::get_if<SeqWitness>(&join); w && std::holds_alternative<NonDirected>(*w)) {
    nd["upperBoundInC"] = nullptr;
    nd["infimum"] = to_string(std::get<NonDirected>(*w).infimum);
  } else {
    throw std::logic_error("x^(1), x^(2) unexpectedly have an upper bound in C");
  }
  result["nonDirected"] = nd;

  const SeqElement sample = sample_b() + x1;
  const auto [b, c] = seq_decompose_bc(sample);
  result["decomposition"] = Json{{"x", to_json(sample)}, {"b", to_json(b)}, {"c", to_json(c)}};

  const auto bc = seq_b_complement_witness();
  result["bComplement"] = Json{{"b", to_json(sample_b())},
                               {"c", to_json(x1)},
                               {"commonIndex", std::get<NonDisjoint>(bc).index}};
  result["nonPervasive"] = std::holds_alternative<NonPervasive>(seq_nonpervasive_witness());
  return result;
}

Report run_selftest(const Command& cmd) {
  selftest::SuiteOptions options;
  options.filter = cmd.filter;
  options.inject_corruption = cmd.inject_corruption;
  if (!options.filter.empty()) {
    const auto& catalog = selftest::suite_catalog();
    const bool known = std::any_of(catalog.begin(), catalog.end(), [&](const auto& s) {
      return s.name == options.filter || std::to_string(s.id) == options.filter;
    });
    if (!known) throw UsageError("unknown suite: " + options.filter);
  }
  const auto results = selftest::run_suites(options);
  Report r;
  r.verb = "selftest";
  r.inputs = Json{{"filter", cmd.filter}, {"injectCorruption", cmd.inject_corruption}};
  Json suites = Json::array();
  std::size_t passed = 0;
  for (const auto& s : results) {
    Json entry{{"id", s.id}, {"name", s.name}, {"passed", s.passed}, {"checks", s.checks}, {"failures", s.failures}};
    if (cmd.timing) entry["seconds"] = s.seconds;
    suites.push_back(entry);
    passed += s.passed ? 1 : 0;
  }
  r.result = Json{{"suites", suites}, {"passed", passed}, {"failed", results.size() - passed}};
  r.exit_code = passed == results.size() ? kExitOk : kExitDomainError;
  return r;
}

bool is_flat(const Json& j) {
  if (!j.is_structured()) return true;
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (j.is_array()) {
    std::string out = "(";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar_text(j[i]);
    return out + ")";
  }
  return j.dump();
}

void render(const Json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out += pad + key + ": " + scalar_text(value) + "\n";
      } else {
        out += pad + key + ":\n";
        render(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_flat(e)) {
        out += pad + "- " + scalar_text(e) + "\n";
      } else {
        out += pad + "-\n";
        render(e, indent + 2, out);
      }
    }
  } else {
    out += pad + scalar_text(j) + "\n";
  }
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& v : verb_table()) out.emplace_back(v.name);
    return out;
  }();
  return names;
}

Report execute(const Command& cmd) {
  const VerbInfo& info = verb_info(cmd.verb);
  if (cmd.args.size() < info.min_args || cmd.args.size() > info.max_args) {
    throw UsageError(cmd.verb + " takes " +
                     (info.min_args == info.max_args ? std::to_string(info.min_args)
                      : info.max_args == kMany       ? "at least " + std::to_string(info.min_args)
                                                     : std::to_string(info.min_args) + ".." + std::to_string(info.max_args)) +
                     " positional argument(s), got " + std::to_string(cmd.args.size()));
  }
  if (cmd.verb == "selftest") return run_selftest(cmd);

  Report r;
  r.verb = cmd.verb;
  if (cmd.verb == "seq-demo") {
    r.result = run_seq_demo();
    return r;
  }

  const OrderedSpace s = load_space(cmd);
  r.inputs["space"] = s.name();
  r.inputs["dim"] = s.dim();
  r.inputs["args"] = cmd.args;
  const std::size_t cap = cmd.band_cap.value_or(kDefaultBandCap);

  if (cmd.verb == "restrict") {
    const IndexSet j = parse_index_set_arg(cmd.args.front(), s.facet_count());
    const Subspace d = restrict_band(s, j);
    const bool band = is_band(s, d);
    r.result = Json{{"support", index_set_to_json(j)},
                    {"restriction", to_json(d)},
                    {"isBand", band},
                    {"majorizing", is_majorizing(s, d, j)},
                    {"projectionBand", band && is_projection_band(s, d).is_projection_band}};
    return r;
  }

  const std::vector<VectorQ> xs = vector_args(cmd.args, s.dim());
  if (cmd.verb == "classify") {
    r.result = run_classify(s, cmd);
  } else if (cmd.verb == "atoms") {
    r.result = run_atoms(s, xs);
  } else if (cmd.verb == "disjoint") {
    r.result = run_disjoint(s, xs[0], xs[1]);
  } else if (cmd.verb == "dcomp") {
    r.result = Json{{"complement", to_json(disjoint_complement(s, xs))}};
  } else if (cmd.verb == "band") {
    r.result = run_band(s, cmd, xs);
  } else if (cmd.verb == "bands") {
    const auto bands = enumerate_bands(s, cap);
    Json list = Json::array();
    for (const auto& b : bands) list.push_back(to_json(b));
    r.result = Json{{"count", bands.size()}, {"bands", list}};
  } else if (cmd.verb == "projections") {
    const auto reports = enumerate_order_projections(s, cap);
    Json list = Json::array();
    for (const auto& p : reports) list.push_back(projection_json(p));
    r.result = Json{{"count", reports.size()}, {"projections", list}};
  } else if (cmd.verb == "lambda") {
    const Rational lambda = atom_lambda(s, xs[0], xs[1]);
    r.result = Json{{"lambda", to_json(lambda)},
                    {"lpValue", to_json(atom_lambda_by_lp(s, xs[0], xs[1]))},
                    {"remainder", to_json(sub(xs[0], scale(lambda, xs[1])))}};
  } else if (cmd.verb == "decompose") {
    const AtomDecomposition d = decompose_by_atom(s, xs[0], xs[1]);
    r.result = Json{{"alpha", to_json(d.lambda)},
                    {"atomPart", to_json(d.atom_part)},
                    {"disjointPart", to_json(d.disjoint_part)}};
  } else if (cmd.verb == "rdp") {
    const auto split = rdp_split(s, xs[0], xs[1], xs[2]);
    r.result = Json{{"split", split ? Json{{"first", to_json(split->first)}, {"second", to_json(split->second)}}
                                    : Json(nullptr)}};
  } else if (cmd.verb == "sup") {
    const Polyhedron p = upper_bound_polyhedron(s, xs);
    const auto sup = sup_in_x(s, xs);
    r.result = Json{{"upperBounds", Json{{"a", to_json(p.a)}, {"b", to_json(p.b)}}},
                    {"sup", sup ? to_json(*sup) : Json(nullptr)}};
  } else if (cmd.verb == "extend") {
    const Subspace d = Subspace::span(xs, s.dim());
    if (!is_band(s, d)) throw Error(Errc::NotABand, "the spanned subspace is not a band");
    const Band b = make_band(s, d);
    r.result = Json{{"band", to_json(b)},
                    {"support", index_set_to_json(extend_band(s, b))},
                    {"complementSupport", index_set_to_json(extend_band(s, disjoint_complement(s, d)))}};
  }
  return r;
}

Json report_to_json(const Report& r, std::optional<double> seconds) {
  Json out{{"verb", r.verb}, {"inputs", r.inputs}, {"result", r.result}};
  if (seconds) out["timing"] = Json{{"seconds", *seconds}};
  return out;
}

std::string render_text(const Report& r) {
  std::string out;
  if (r.verb == "selftest") {
    for (const auto& s : r.result["suites"]) {
      std::ostringstream line;
      line << (s["passed"].get<bool>() ? "PASS" : "FAIL") << "  " << s["id"].get<int>() << ' '
           << s["name"].get<std::string>() << "  (" << s["checks"].get<std::size_t>() << " checks";
      if (s.contains("seconds")) line << ", " << std::fixed << std::setprecision(2) << s["seconds"].get<double>() << " s";
      line << ")\n";
      out += line.str();
      for (const auto& f : s["failures"]) out += "      " + f.get<std::string>() + "\n";
    }
    out += std::to_string(r.result["passed"].get<std::size_t>()) + " passed, " +
           std::to_string(r.result["failed"].get<std::size_t>()) + " failed\n";
    return out;
  }
  out += r.verb;
  if (r.inputs.contains("space")) out += " (" + r.inputs["space"].get<std::string>() + ")";
  out += "\n";
  render(r.result, 2, out);
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in ordered vector spaces with polyhedral cones", "ordercone"};
  app.require_subcommand(1);
  Command cmd;

  for (const auto& info : verb_table()) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    sub->add_flag("--json", cmd.json, "machine-readable output");
    sub->add_flag("--timing", cmd.timing, "report wall-clock time");
    if (info.needs_space) {
      sub->add_option("--example", cmd.example, "builtin space: four-ray, simplex:<n>");
      sub->add_option("--space", cmd.space, "JSON space spec file");
    }
    // Positional arguments are JSON arrays. They are collected as extras
    // because CLI11 would otherwise split "[a,b]" on its own.
    if (info.max_args > 0) sub->allow_extras();
    const std::string name = info.name;
    if (name == "classify") {
      sub->add_option("--probe", cmd.probes, "check for a positive element below (F b) v 0")->allow_extra_args(false);
      sub->add_flag("--density", cmd.density, "validate order density on a grid of cover points");
    } else if (name == "band") {
      sub->add_flag("--subspace", cmd.subspace, "analyse the span of the arguments");
      sub->add_option("--with", cmd.with, "complementary subspace for the ideal decomposition check")
          ->allow_extra_args(false);
    } else if (name == "selftest") {
      sub->add_option("--filter", cmd.filter, "suite name or number");
      sub->add_flag("--inject-corruption", cmd.inject_corruption, "perturb the four-ray facet data");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const CLI::App* chosen = app.get_subcommands().front();
  cmd.verb = chosen->get_name();
  cmd.args = chosen->remaining();
  for (const auto& a : cmd.args) {
    if (a.size() > 1 && a[0] == '-' && a[1] == '-') {
      err << "usage error: unknown option " << a << "\n";
      return kExitUsage;
    }
  }

  if (const char* cap = std::getenv("ORDERCONE_BAND_CAP")) {
    char* end = nullptr;
    const long value = std::strtol(cap, &end, 10);
    if (*cap == '\0' || *end != '\0' || value < 0 || value > 30) {
      err << "error: ORDERCONE_BAND_CAP must be an integer in 0..30\n";
      return kExitUsage;
    }
    cmd.band_cap = static_cast<std::size_t>(value);
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    report = execute(cmd);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (cmd.json) {
      out << Json{{"verb", cmd.verb}, {"error", Json{{"code", errc_name(e.code())}, {"message", e.what()}}}}.dump(2)
          << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomainError;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (cmd.json) {
    out << report_to_json(report, cmd.timing ? std::optional<double>(seconds) : std::nullopt).dump(2) << "\n";
  } else {
    out << render_text(report);
    if (cmd.timing) out << "time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
  }
  return report.exit_code;
}

}  // namespace ordercone::cli
