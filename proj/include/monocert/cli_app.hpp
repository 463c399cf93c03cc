#pragma once

#include <string>
#include <utility>
#include <vector>

namespace monocert::cli {

// (subcommand, operation) pairs reachable from the command line; the
// coverage test asserts every public operation appears exactly once.
const std::vector<std::pair<std::string, std::string>>& dispatch_table();

// Parse argv and run; returns the process exit code
// (0 pass, 1 violations, 2 inconclusive/non-convergence, 64 usage).
int run(int argc, const char* const* argv);

}  // namespace monocert::cli
