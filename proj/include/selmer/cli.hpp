#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace selmer {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitResource = 3,
  kExitVerification = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// artifact to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selmer
