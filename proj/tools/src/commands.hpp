#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricmot::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kUndetermined = 3,
  kNotCertified = 4,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Files given to one command are processed concurrently;
/// reports are written in input order and the exit code is the largest one.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricmot::cli
