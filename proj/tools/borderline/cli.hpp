#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace borderline::cli {

// Runs one command (args without the program name) writing reports to `out`
// and diagnostics to `err`.  Returns the process exit code: 0 success,
// 1 input error, 2 inconclusive or unresolved.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace borderline::cli
