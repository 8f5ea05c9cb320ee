#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lattes::cli {

/// Runs one command-line request (argv without the program name).
/// Exit codes: 0 success, 1 failed --expect assertion, 2 usage or parse
/// error, 3 degree budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lattes::cli
