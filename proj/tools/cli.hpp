#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regmis::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,        // verification failed or request infeasible
  kBadInput = 2,      // malformed input or arguments
  kOutOfBudget = 3,   // solver budget exhausted
};

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regmis::cli
