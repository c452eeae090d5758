#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mafre::cli {

// Stable across releases.
enum ExitCode : int {
  kExitOk = 0,
  kExitUnsolvable = 1,
  kExitInputError = 2,
  kExitBudgetExceeded = 3,
  kExitInternalError = 4,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mafre::cli
