#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polybern::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polybern::cli
