#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wavenum::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kMismatch = 2,
    kBudget = 3,
};

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wavenum::cli
