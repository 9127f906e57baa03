#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pascalforms {

// Parses and dispatches one command-line invocation (arguments without the
// program name). Exit codes: 0 success or all checks passed, 1 a
// verification failed, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pascalforms
