#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace core_entropy::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kConvergence = 3,
};

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace core_entropy::cli
