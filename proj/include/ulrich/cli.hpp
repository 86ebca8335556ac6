#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ulrich::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFailed = 2,
  kInternalError = 3,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ulrich::cli
