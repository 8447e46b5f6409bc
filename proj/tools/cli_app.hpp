#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planarity::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 2,
  kDisagreement = 3,
  kBudget = 4,
  kCacheIntegrity = 5,
};

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planarity::cli
