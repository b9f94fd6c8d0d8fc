#ifndef FPTLAB_TOOLS_CLI_HPP
#define FPTLAB_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "fptlab/errors.hpp"

namespace fptlab::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kParse = 2,
  kConstraint = 3,
  kResource = 4,
  kCheckFailed = 5,
};

int exit_code_for(ErrorKind kind);

// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fptlab::cli

#endif  // FPTLAB_TOOLS_CLI_HPP
