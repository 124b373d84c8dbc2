#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bimatch::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParse = 2,
  kPrecondition = 3,
  kInvalidMatching = 4,
  kCapExceeded = 5,
};

// Runs one command line (args[0] is the program name) and returns the exit
// code. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bimatch::cli
