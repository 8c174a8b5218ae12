#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permfib::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kPass = 0,
    kFailure = 1, ///< counterexample found, or input outside a bijection's domain
    kUsage = 2,
};

/// Default cap on n for permutation-based claims: 9, or PERMFIB_MAX_N when set.
int claim_cap();

/// Runs the tool on args (without the program name), writing to out and err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace permfib::cli
