#pragma once

#include <iosfwd>

namespace ipg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kRestoreViolation = 3,
  kOracleMismatch = 4,
  kCorruption = 5,
};

// Entry point of the `ipg` tool, callable from tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ipg::cli
