#pragma once

#include <iosfwd>

namespace posmatch::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInsufficientCapacity = 2,
  kNonAscii = 3,
  kMalformedImage = 4,
  kWrongKey = 5,
  kMalformedPositionFile = 6,
  kDimensionMismatch = 7,
};

// Environment variable consulted for the secret key.
inline constexpr const char* kKeyEnvVar = "POSMATCH_KEY";

// Runs one CLI invocation; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace posmatch::cli
