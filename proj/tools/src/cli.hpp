#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kmroot::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kComputation = 3 };

/// Runs the command line `args` (without the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmroot::cli
