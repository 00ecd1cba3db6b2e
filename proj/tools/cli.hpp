#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sop::cli {

// Runs one CLI invocation (arguments without the program name). Returns the
// process exit code: 0 success, 2 validation/usage error, 3 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sop::cli
