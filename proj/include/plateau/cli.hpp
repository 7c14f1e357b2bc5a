#pragma once

#include <ostream>

namespace plateau {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitVerifyFailed = 2,
    kExitCapped = 3,
};

/// Entry point of `plateau_rt`; writes results to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace plateau
