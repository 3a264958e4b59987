#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace keane::cli {

// Runs one command-line invocation against the given streams and returns the
// process exit code: 0 success, 1 a check reported FAIL, 2 bad usage or bad
// parameters, 3 resource limit hit.  The binary's main() is a thin wrapper.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace keane::cli
