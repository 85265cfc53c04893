#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equimorse {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitHolds = 0, kExitFails = 1, kExitUsage = 2 };

/// Runs one command (args exclude the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace equimorse
