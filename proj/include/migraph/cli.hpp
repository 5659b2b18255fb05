#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace migraph::cli {

// Full command-line entry point. args excludes the program name.
// Exit codes: 0 success, 1 input parse/validation failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace migraph::cli
