#ifndef RATSTOCH_CLI_HPP
#define RATSTOCH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ratstoch::cli {

// Exit statuses. Mathematical negatives are distinct from operational errors.
enum ExitCode : int {
  kOk = 0,
  kDistinct = 1,
  kInfeasible = 2,
  kBoundExceeded = 3,
  kUsage = 64,
  kDataError = 65,
  kInternal = 70,
};

// Runs one command (args exclude the program name). Results go to out as
// "key: value" lines; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratstoch::cli

#endif  // RATSTOCH_CLI_HPP
