#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdtool::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,      // two routes disagreed; always a defect
  kUsage = 2,         // bad arguments or a violated precondition
  kCapacity = 3,      // order cap, nonzero budget or degree cap
  kInapplicable = 4,  // isov/explain outside the theorem's hypotheses with --strict
};

/// Runs one command. args[0] is the program name. Results go to `out`,
/// diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdtool::cli
