#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anyon {

/// Process exit statuses of the command-line front end.
enum ExitStatus : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitValidation = 2,
  kExitIo = 3,
  kExitResourceCap = 4,
};

/// Runs `anyon-carnot <subcommand> ...`; `args` excludes the program name.
/// Results go to `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anyon
