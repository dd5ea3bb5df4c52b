#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coquasi::cli {

enum ExitCode : int {
  kSuccess = 0,
  /// A mathematical negative (failed verification, no solutions, ...) under --strict.
  kNegative = 1,
  kUsage = 2,
};

/// Runs the command line `args` (without the program name). Documents go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coquasi::cli
