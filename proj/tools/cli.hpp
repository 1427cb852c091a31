#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grpmat::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kInputFormat = 3,
  kScaleLimit = 4,
};

/// Runs one grpmat invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grpmat::cli
