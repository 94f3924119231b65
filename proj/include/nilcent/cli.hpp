#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilcent::cli {

/// Exit statuses of the command-line driver.
enum ExitCode : int {
  kOk = 0,
  kBadInput = 1,            ///< parse failure or violated precondition
  kTheoremViolation = 2,    ///< hypothesis held and the conclusion failed
};

/// Runs `nilcent <subcommand> ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilcent::cli
