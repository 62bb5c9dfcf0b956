#pragma once

#include <ostream>
#include <span>
#include <string>

namespace inversive::cli {

/// Process exit statuses. Stable across releases.
enum ExitCode : int {
    kPass = 0,
    kCheckFailed = 1,
    kParseError = 2,
    kDegenerateConfiguration = 3,
    kNotTangent = 4,
    kDegenerateTriple = 5,
    kInvalidSeed = 6,
    kNotNormalized = 7,
};

/// Runs one command line (program name excluded) and returns the exit
/// status. Reports go to `out`, diagnostics to `err`; --svg/--csv write files.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

}  // namespace inversive::cli
