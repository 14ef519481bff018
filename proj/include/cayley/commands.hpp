#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cayley {

/// Runs the command line given argv-style arguments (program name excluded).
/// Exit status: 0 success, 1 usage/parse error, 2 mathematical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cayley
