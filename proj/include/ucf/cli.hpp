#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ucf::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBadInput = 2,
  kInternal = 3,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out` unless --out redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ucf::cli
