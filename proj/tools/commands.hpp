#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kato::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNoCusps = 2,
  kScope = 3,
  kMassMismatch = 4,
};

/// Runs one command line (args[0] is the program name). Reports go to the
/// --output file when given, else to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kato::cli
