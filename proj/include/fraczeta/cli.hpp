#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fraczeta::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kNumericFailure = 3,
};

/// Runs the command line `args` (without the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fraczeta::cli
