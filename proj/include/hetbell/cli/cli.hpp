#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hetbell::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs the command line `hetbell <args...>` (args excludes the program
/// name). Output goes to `out` unless --out names a file; diagnostics go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hetbell::cli
