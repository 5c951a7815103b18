#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cplanes::cli {

/// Exit codes: 0 success / all checks pass, 1 domain or check failure,
/// 2 usage error.
enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cplanes::cli
