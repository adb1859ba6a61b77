#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ordercone/ordercone.hpp"

namespace ordercone::cli {

/// Insertion-ordered so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const VectorQ& v);
Json to_json(std::span<const VectorQ> vs);
Json to_json(const MatrixQ& m);
/// Coordinate sets are written 1-based.
Json index_set_to_json(const IndexSet& s);
Json to_json(const Subspace& d);
Json to_json(const Band& b);
Json to_json(const Classification& c);
Json to_json(const seq::SeqElement& x);

/// A rational from a JSON string ("p" or "p/q") or integer.
Rational rational_from_json(const Json& j);
VectorQ vector_from_json(const Json& j);
/// Parses command-line text holding a JSON array of rationals.
VectorQ parse_vector_arg(std::string_view text);
/// Parses a JSON array of 1-based coordinate indices into a 0-based set.
IndexSet parse_index_set_arg(std::string_view text, std::size_t m);

/// Builtins: "four-ray" and "simplex:<n>". Throws Error(UnknownBuiltin).
OrderedSpace builtin_space(std::string_view name);

/// Reads a JSON space spec. Syntax errors are reported as
/// Error(ParseError) with line and column.
OrderedSpace space_from_text(std::string_view text, std::string_view origin);
OrderedSpace space_from_file(const std::string& path);

}  // namespace ordercone::cli
