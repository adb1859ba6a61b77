#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace ordercone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

const std::vector<std::string>& verbs();

struct Command {
  std::string verb;
  std::optional<std::string> example;   // builtin name
  std::optional<std::string> space;     // path to a JSON space spec
  std::vector<std::string> args;        // positional JSON arguments
  bool json = false;
  bool timing = false;
  // classify
  std::vector<std::string> probes;
  bool density = false;
  // band
  bool subspace = false;
  std::vector<std::string> with;
  // bands, projections
  std::optional<std::size_t> band_cap;
  // selftest
  std::string filter;
  bool inject_corruption = false;
};

/// Thrown for arity and argument-shape problems (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string verb;
  Json inputs = Json::object();
  Json result = Json::object();
  int exit_code = kExitOk;
};

/// Dispatches to the library. Throws UsageError or ordercone::Error.
Report execute(const Command& cmd);

Json report_to_json(const Report& r, std::optional<double> seconds);
std::string render_text(const Report& r);

/// Full front end: parses argv, runs, prints, returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordercone::cli
