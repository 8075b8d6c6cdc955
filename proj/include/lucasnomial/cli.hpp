#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lucasnomial::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kBudgetExceeded = 3,
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lucasnomial::cli
