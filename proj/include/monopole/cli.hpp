#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monopole::cli {

/// Runs one command line (without the program name). The JSON report goes to
/// `out` unless --output is given; usage errors go to `err`.
/// Exit status: 0 success, 2 validation failure, 3 numerical non-convergence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monopole::cli
