#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqsum::cli {

/// Runs one command. `args` excludes the program name.
/// Exit codes: 0 success, 1 a requested check failed, 2 bad arguments or input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqsum::cli
