#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace petersch {

enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitRejected = 2,  // precondition violated
  kExitInternal = 3,  // invariant failure
};

/// Runs one command line (without the program name) against the given
/// streams and returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace petersch
