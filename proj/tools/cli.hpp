#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlab::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kRefuted = 2,
  kUsage = 64,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --output is given; diagnostics and usage go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlab::cli
