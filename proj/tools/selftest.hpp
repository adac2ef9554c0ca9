#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace staircase::cli {

/// Outcome of one oracle-equivalence suite.
struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  /// Description of the first failing check, empty when all passed.
  std::string first_mismatch;

  bool passed() const { return mismatches == 0; }
};

/// Smallest and largest size accepted by run_selftest.
inline constexpr int kSelftestMinSize = 2;
inline constexpr int kSelftestMaxSize = 6;

/// Runs every suite with tableau sizes up to max_n, comparing closed forms,
/// the counting engine, the chain-rule model and the steady-state solvers
/// against exhaustive enumeration. Throws std::out_of_range for max_n
/// outside [kSelftestMinSize, kSelftestMaxSize].
std::vector<SuiteResult> run_selftest(int max_n);

}  // namespace staircase::cli
