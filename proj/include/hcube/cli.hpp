#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcube::cli {

enum ExitCode : int {
  kSuccess = 0,
  kIoFailure = 1,
  kInvalidInput = 2,
  kNotDeterminable = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcube::cli
