#pragma once

#include <ostream>

namespace magsense::cli {

/// Exit statuses of run().
enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,       ///< unexpected error (I/O etc.)
    exit_invalid = 2,       ///< bad flags, bad config, unknown figure
    exit_unstable = 3,
    exit_singular = 4,
    exit_validation = 5,    ///< validate: deviation above tolerance
};

/// Entry point of the `magsense` tool. Errors are reported on `err` as one line
///   error kind=<kind> message="<text>"
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace magsense::cli
