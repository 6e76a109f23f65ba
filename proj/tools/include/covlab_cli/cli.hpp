#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace covlab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidSpec = 2,
  kAmbiguousTruncation = 3,
  kWitnessPrecondition = 4,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` or to the --output file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covlab::cli
