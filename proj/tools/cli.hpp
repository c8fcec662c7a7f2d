#pragma once

#include <iosfwd>

namespace tcla::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kInvalidInput = 3,
  kInternal = 4,
};

/// Runs one invocation of the command-line tool. Normal output goes to
/// `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tcla::cli
