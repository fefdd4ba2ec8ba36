#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2green::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kInternal = 3,
  kInconsistent = 4,
};

/// Runs the command line; args excludes the program name. Normal output goes to
/// out (or to --output), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl2green::cli
