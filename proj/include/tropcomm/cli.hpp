#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropcomm::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,      // domain error or failed verification
  kParseError = 2,
  kUnsupported = 3,
  kBudget = 4,
  kExhausted = 5,    // sampling ran out of draws, or no lift was found
};

/// Name of the environment variable holding the default fan budget.
inline constexpr const char* kBudgetEnv = "TROPCOMM_FAN_BUDGET";

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropcomm::cli
