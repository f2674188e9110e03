#pragma once

#include <iosfwd>

namespace consec {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitRuntime = 2 };

/// Runs the `consec` command line (gen, mine, graph, oracle, threshold).
/// Output without --out goes to `out`; diagnostics and counters go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace consec
