#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torictop::cli {

/// Recognised verbs, in the order they are documented.
const std::vector<std::string>& verbs();

/// Runs one command (argv without the program name), writing JSON to `out`.
/// Returns 0 on success, 2 for invalid input, 3 for a violated precondition,
/// 4 when a size guard trips.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace torictop::cli
