#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ldpcball::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,  // verification violation or crossover failure
  exit_usage = 2,    // bad flags or unparseable input
  exit_resource = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldpcball::cli
