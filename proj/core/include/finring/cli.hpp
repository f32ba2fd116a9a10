#pragma once

#include <string>
#include <vector>

namespace finring::cli {

/// Exit codes shared by the command driver and the binary.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;      // a check or axiom failed
inline constexpr int exit_usage = 2;        // bad arguments, parse or elaboration error
inline constexpr int exit_cap = 3;          // resource cap exceeded
inline constexpr int exit_degenerate = 4;   // zero ring where a property query needs more
inline constexpr int exit_search_hit = 5;   // converse search found an instance

struct CliResult {
  int exit_code = exit_ok;
  std::string out;  ///< goes to stdout
  std::string err;  ///< goes to stderr
};

/// Runs one command line (without argv[0]). All output is returned, nothing
/// is printed. JSON payloads are byte-deterministic for a fixed seed; timing
/// lives in a dedicated "timing" field meant to be stripped before golden
/// comparison.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace finring::cli
