#pragma once

#include <iosfwd>

namespace kindep::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;      // parse, configuration or oracle-limit error
inline constexpr int exit_violation = 3;  // a result failed its own certificate

// Entry point of the kindep tool; writes results to `out` and diagnostics to
// `err` and returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kindep::cli
