#ifndef HYPENT_CLI_HPP
#define HYPENT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hypent::cli {

enum ExitCode : int {
  kOk = 0,
  kIoFailure = 1,
  kValidationFailure = 2,
  kNonConvergence = 3,
  kInvariantFailure = 4,
};

/// Runs the command line `hypent <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypent::cli

#endif  // HYPENT_CLI_HPP
