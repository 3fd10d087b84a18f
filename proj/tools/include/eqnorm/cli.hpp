#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqnorm::cli {

/// Exit codes: a negative mathematical answer is distinct from bad input and
/// from an exhausted resource cap.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kInputError = 2,
  kCapExceeded = 3,
  kInternalError = 4,
};

inline constexpr const char* kToolName = "eqnorm";
inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command line (without the program name), writing results to out
/// and diagnostics to err. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqnorm::cli
