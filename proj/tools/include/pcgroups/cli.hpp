#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcgroups::cli {

  // Exit codes.
  inline constexpr int ok             = 0;
  inline constexpr int check_failed   = 1;
  inline constexpr int usage_error    = 2;
  inline constexpr int resource_limit = 3;

  // Runs the command line `args` (without the program name). Results go to
  // out, diagnostics to err.
  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pcgroups::cli
