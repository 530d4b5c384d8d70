#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snort {

/// Process exit codes of the snortlab tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitResource = 3,
  kExitVerification = 4,
};

/// Runs the snortlab command line (argv[0] included). `serve` blocks.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// True when the outcome of (family, n) is asserted by a proven result, so a
/// non-N outcome there is a regression.
bool theorem_covered(const std::string& family, int n);

}  // namespace snort
