#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vwapgamma::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,     // bad arguments or parameters
  kExitData = 3,      // unreadable or malformed input, unwritable output
  kExitNumeric = 4,   // a numerical procedure has no solution
};

/// Runs one command line (without the program name). Reports go to `out`
/// unless --output names a file; diagnostics go to `err` as one line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vwapgamma::cli
