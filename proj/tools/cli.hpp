#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace famrank::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kDiscrepancy = 1,
  kUsage = 2,
  kUnsupported = 3,
};

/// Runs one invocation. `args` excludes the program name. JSON goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace famrank::cli
