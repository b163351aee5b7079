#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgelef {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFailed = 1,
  kExitStructural = 2,
  kExitPrecondition = 3,
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgelef
