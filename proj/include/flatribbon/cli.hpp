#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatribbon {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_verification_failed = 2,
  exit_invalid_input = 3,
};

/// Runs one command line (without the program name). `in` backs the "-"
/// file argument.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace flatribbon
