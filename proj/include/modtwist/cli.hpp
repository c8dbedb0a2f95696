#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modtwist::cli {

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when a valid input
/// fails verification, 2 on malformed input or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modtwist::cli
