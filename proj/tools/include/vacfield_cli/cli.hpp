#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vacfield::cli {

enum ExitCode : int {
    kSuccess = 0,
    kConfigError = 2,
    kNumericalFailure = 3,
};

/// Runs one invocation. `args` excludes the program name. Results go to `out`
/// (or the --out file), diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vacfield::cli
