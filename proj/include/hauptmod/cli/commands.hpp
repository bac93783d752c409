#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hauptmod::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kSolverError = 3 };

/// Runs the tool on `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hauptmod::cli
