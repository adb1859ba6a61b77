#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ordercone::selftest {

struct SuiteOptions {
  /// Suite name or number; empty runs everything.
  std::string filter;
  std::uint64_t seed = 20240917;
  /// Replaces one four-ray facet by a valid but redundant inequality before
  /// building, so the four-ray suite must fail naming the broken invariant.
  bool inject_corruption = false;
};

struct SuiteResult {
  int id = 0;
  std::string name;
  std::string summary;
  bool passed = false;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  double time_limit = 0;
};

struct SuiteInfo {
  int id;
  std::string name;
  std::string summary;
  double time_limit;   // seconds
};

const std::vector<SuiteInfo>& suite_catalog();

/// Runs the matching suites in id order. A suite fails on any violated
/// check, any exception, or when it exceeds its time limit.
std::vector<SuiteResult> run_suites(const SuiteOptions& options);

}  // namespace ordercone::selftest
