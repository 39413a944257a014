#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conealg::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kOverflow = 3,
  kVerificationFailed = 4,
};

/// Runs one command line (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conealg::cli
