#ifndef LRM_CLI_HPP
#define LRM_CLI_HPP

#include <string>
#include <vector>

namespace lrm::cli {

enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2 };

struct CommandResult {
  int exit_code = kOk;
  std::string out;  // JSON (or CSV) payload
  std::string err;
};

/// Runs one subcommand. `args` excludes the program name.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace lrm::cli

#endif  // LRM_CLI_HPP
