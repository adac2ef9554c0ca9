#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace staircase::cli {

inline constexpr int kExitOk = 0;
/// An unexpected internal error (not caused by the arguments).
inline constexpr int kExitInternal = 1;
/// Bad flags, out-of-range sizes, malformed rationals or invalid weights.
inline constexpr int kExitValidation = 2;
/// `selftest` found a disagreement between a method and its oracle.
inline constexpr int kExitSelftestMismatch = 3;

/// Largest size for which `prob` and `joint` add an enumeration column.
inline constexpr int kCliOracleMaxSize = 8;

/// Runs one staircase-lab command line (without the program name), writing
/// results to out and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace staircase::cli
