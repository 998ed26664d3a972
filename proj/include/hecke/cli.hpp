#pragma once

#include <iosfwd>

namespace hecke {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitBudget = 2, kExitInvalid = 3 };

/// Entry point behind the `hecke` executable; reports go to `out` (or --out),
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hecke
