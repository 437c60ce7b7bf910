#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coinword::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2 };

/// Parses `args` (without the program name) and runs one subcommand.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coinword::cli
