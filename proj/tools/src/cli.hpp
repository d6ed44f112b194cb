#pragma once

#include <ostream>

namespace triwalk::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNotTriangulable = 2,
  kExitValidation = 3,
  kExitNumerical = 4,
};

/// Entry point of the `triwalk` tool; `out` receives command output unless
/// --out is given, `err` receives diagnostics.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace triwalk::cli
