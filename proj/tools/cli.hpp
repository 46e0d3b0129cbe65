#pragma once

#include <iosfwd>

namespace billiards::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kRange = 2,
  kFailed = 3,
  kInternal = 4,
};

// Runs one command line. Results go to `out` (or the --out file), diagnostics
// to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace billiards::cli
