#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locarec::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kData = 2,
  kIo = 3,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locarec::cli
