#pragma once

#include <string>
#include <vector>

namespace cehf {

struct CommandResult {
  int exit_code = 0;  // 0/1 per command, 2 usage or input error, 3 undecided/unsupported
  std::string out;    // JSON (DOT for decompose --dot)
  std::string err;    // human-readable notes
};

/// Runs one command line (without the program name).
CommandResult execute_command(const std::vector<std::string>& args);

}  // namespace cehf
