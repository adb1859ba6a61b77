#include "json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"

namespace ordercone::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Json parse_json(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    parse_fail(std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(column) +
               ": malformed JSON (line " + std::to_string(line) + ", column " + std::to_string(column) + ")");
  }
}

std::vector<VectorQ> vectors_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) parse_fail("\"" + field + "\" must be an array of vectors");
  std::vector<VectorQ> out;
  for (const auto& row : j) out.push_back(vector_from_json(row));
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const VectorQ& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}

Json to_json(std::span<const VectorQ> vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json to_json(const MatrixQ& m) { return to_json(m.row_list()); }

Json index_set_to_json(const IndexSet& s) {
  Json out = Json::array();
  for (auto j : s) out.push_back(j + 1);
  return out;
}

Json to_json(const Subspace& d) {
  return Json{{"dim", d.dim()}, {"basis", to_json(std::span<const VectorQ>(d.basis()))}};
}

Json to_json(const Band& b) {
  return Json{{"zeroSet", index_set_to_json(b.zero_set)},
              {"basis", to_json(std::span<const VectorQ>(b.carrier.basis()))},
              {"directed", b.directed}};
}

Json to_json(const Classification& c) {
  Json weak;
  switch (c.weakly_pervasive.status) {
    case WeakStatus::Holds:
      weak = "holds";
      break;
    case WeakStatus::NoViolationFound:
      weak = "noViolationFound";
      break;
    case WeakStatus::Violated: {
      const auto& [b, d] = *c.weakly_pervasive.certificate;
      weak = Json{{"violated", Json::array({to_json(b), to_json(d)})}};
      break;
    }
  }
  return Json{{"lattice", c.is_lattice},   {"pervasive", c.is_pervasive}, {"fordable", c.is_fordable},
              {"weaklyPervasive", weak}, {"rdp", c.has_rdp},           {"atoms", c.atom_count}};
}

Json to_json(const seq::SeqElement& x) {
  Json entries = Json::object();
  for (const auto& [k, v] : x.explicit_entries()) entries[std::to_string(k)] = to_string(v);
  return Json{{"entries", entries}, {"tailStart", x.tail_start()}, {"tailValue", to_string(x.tail_value())}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  parse_fail("expected a rational string or an integer, got " + j.dump());
}

VectorQ vector_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("expected an array of rationals, got " + j.dump());
  VectorQ v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

VectorQ parse_vector_arg(std::string_view text) {
  return vector_from_json(parse_json(text, "argument"));
}

IndexSet parse_index_set_arg(std::string_view text, std::size_t m) {
  const Json j = parse_json(text, "argument");
  if (!j.is_array()) parse_fail("expected an array of coordinate indices, got " + j.dump());
  IndexSet out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) parse_fail("coordinate indices must be integers, got " + e.dump());
    const auto k = e.get<long long>();
    if (k < 1 || static_cast<std::size_t>(k) > m) {
      throw Error(Errc::PreconditionViolated,
                  "coordinate " + std::to_string(k) + " outside 1.." + std::to_string(m));
    }
    out.push_back(static_cast<std::size_t>(k - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrderedSpace builtin_space(std::string_view name) {
  if (name == "four-ray") return selftest::four_ray_space();
  constexpr std::string_view prefix = "simplex:";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = name.substr(prefix.size());
    std::size_t n = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && end == digits.data() + digits.size() && n >= 1 && n <= 16) {
      return selftest::simplex_space(n);
    }
  }
  throw Error(Errc::UnknownBuiltin,
              "\"" + std::string(name) + "\" (builtins: four-ray, simplex:<n> with 1 <= n <= 16)");
}

OrderedSpace space_from_text(std::string_view text, std::string_view origin) {
  const Json j = parse_json(text, origin);
  if (!j.is_object()) parse_fail(std::string(origin) + ": space spec must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0) {
    parse_fail(std::string(origin) + ": \"dim\" must be a nonnegative integer");
  }
  const auto dim = j["dim"].get<std::size_t>();
  std::optional<std::vector<VectorQ>> generators;
  std::optional<std::vector<VectorQ>> facets;
  if (j.contains("generators")) generators = vectors_from_json(j["generators"], "generators");
  if (j.contains("facets")) facets = vectors_from_json(j["facets"], "facets");
  std::string name = j.value("name", std::string(origin));
  return build_space(dim, std::move(generators), std::move(facets), std::move(name));
}

OrderedSpace space_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot read space file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return space_from_text(buffer.str(), path);
}

}  // namespace ordercone::cli
