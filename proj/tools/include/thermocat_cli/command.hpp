#pragma once

#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace thermocat::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitForbidden = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitDomain = 4,
};

/// Subcommand plus every option value as text; defaults are filled in, so
/// each documented key is present.
struct Command {
  std::string name;
  std::map<std::string, std::string> options;
  std::set<std::string> explicit_keys;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// argv without the program name. Merges --config (flags win) and checks
/// that every value parses. Throws UsageError, IoError or HelpRequested.
Command parse_command(const std::vector<std::string>& argv);

/// Runs a parsed command. Data goes to out, diagnostics to err.
int execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_command + execute with exit-code mapping.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace thermocat::cli
