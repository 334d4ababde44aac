#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leray::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;   // inexact division, no degeneration, sweep violations
inline constexpr int kExitUsage = 2;      // bad arguments or unparsable input files
inline constexpr int kExitCrossCheck = 3; // two routes to one quantity disagreed

/// Runs the `leray` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leray::cli
