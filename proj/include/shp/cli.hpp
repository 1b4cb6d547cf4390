#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shp::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  ok = 0,
  negative = 1,  // "not a member", "not heapable"
  usage = 2,
  resource = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shp::cli
