#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetatop::cli {

// Runs one command line (args[0] is the program name) and returns the exit
// code: 0 success, 1 computation failure, 2 invalid input, 3 inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetatop::cli
