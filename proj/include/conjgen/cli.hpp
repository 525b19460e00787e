#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conjgen {

/// Exit codes of every command.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitDataError = 2 };

/// Runs one command line (without the program name), writing reports to out
/// and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conjgen
