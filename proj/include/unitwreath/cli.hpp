#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace unitwreath {

enum ExitCode : int { kExitPass = 0, kExitHypothesisFail = 1, kExitVerificationFail = 2, kExitInputError = 3 };

struct CommandConfig {
  std::string subcommand;  // check | construct | verify | scan | model
  std::string input;
  bool json = false;
  bool oracle = false;
  bool fail_fast = false;
  std::optional<std::string> witness;  // "a=<word>,b=<word>,z=<word>", any subset
  std::optional<std::size_t> order;
  std::size_t cap = 1u << 16;
};

// Parses argv-style arguments (without the program name). Returns nullopt
// after printing help or a usage error; exit_code receives the status.
std::optional<CommandConfig> parse_command_line(const std::vector<std::string>& args, std::ostream& out,
                                                std::ostream& err, int& exit_code);

int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

// parse_command_line followed by run.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitwreath
