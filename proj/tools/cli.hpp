#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sympow::cli {

// Runs one CLI invocation (argv without the program name). Returns the
// process exit code: 0 success, 2 invalid input, 3 resource limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sympow::cli
