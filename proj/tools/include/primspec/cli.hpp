#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace primspec::cli {

enum ExitCode : int {
  ok = 0,
  invalid_input = 2,
  inadmissible_ideal = 3,
};

// Runs one command line (args[0] is the program name) and writes the
// result to `out`. Errors are reported on `out` as a JSON object
// {"error": {...}} so that callers can parse every outcome.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace primspec::cli
