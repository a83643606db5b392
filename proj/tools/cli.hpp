#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace greenforge::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kInvalidConfig = 2;
inline constexpr int kMismatch = 3;

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace greenforge::cli
