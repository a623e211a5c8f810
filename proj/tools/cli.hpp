#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zeck::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kRejected = 2,  // contract, domain, corruption or I/O error
  kInternal = 3,  // an internal invariant failed
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeck::cli
