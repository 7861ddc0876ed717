#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwire::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kDomainViolation = 1,  // invalid boundary condition, non-unitary input, ...
  kUsageError = 2,       // bad flags, unparsable files, E <= 0
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwire::cli
