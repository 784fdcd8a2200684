#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace genuskit::cli {

/// 0: success; 1: usage or invalid parameters; 2: a check failed.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitCheckFailed = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genuskit::cli
