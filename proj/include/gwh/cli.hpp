#pragma once

#include <iosfwd>

namespace gwh {

/// Runs one CLI invocation. JSON results go to out (or to --output), diagnostics
/// to err. Exit codes: 0 success, 2 validation error or bad usage, 3 capacity error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gwh
