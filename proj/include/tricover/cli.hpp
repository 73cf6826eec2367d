#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tricover {

// Exit codes: 0 success/covered, 2 coverage gap found, 3 threshold refusal,
// 4 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitGap = 2;
inline constexpr int kExitThreshold = 3;
inline constexpr int kExitUsage = 4;

/// Runs the tricover command line (args exclude the program name).
/// Kept out of main() so tests can drive commands in-process.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tricover
