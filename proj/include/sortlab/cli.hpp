#pragma once

#include <iosfwd>

namespace sortlab {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
};

// Entry point for the `sortlab` command. Subcommands: sort, verify, bench,
// replay. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sortlab
