#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gksl::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvariantFailure = 2,
  kParseFailure = 3,
};

// Runs one command line; args[0] is the program name. Reports go to `out`
// (or to --out files), diagnostics to `err`, and "-" input reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gksl::cli
