#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmw::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kDataError = 2,
  kInfeasible = 3,
  kInternal = 4,
};

// Entry point; args[0] is the program name. Subcommands: generate, solve,
// experiment, report, validate.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmw::cli
