#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ospchar::cli {

// Parses and runs one command line (without the program name).  Returns the
// process exit code: 0 success, 1 verification failure, 2 usage error,
// 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ospchar::cli
