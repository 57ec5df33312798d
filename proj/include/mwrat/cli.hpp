#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwrat {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2 };

/// Runs one command line (without the program name). Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwrat
