#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace enriched {

  enum ExitCode : int {
    exit_ok         = 0,
    exit_usage      = 1,
    exit_parse      = 2,
    exit_validation = 3,
    exit_bounds     = 4,
  };

  /// Runs one command line (without the program name).
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace enriched
