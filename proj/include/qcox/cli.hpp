#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcox {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // a requested check failed (or an internal invariant)
  kExitInput = 2,        // usage, parse, construction or hypothesis errors
  kExitResource = 3,     // a search or enumeration cap was reached
};

/// Runs `qcox <subcommand> ...`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcox
