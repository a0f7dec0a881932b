#pragma once

#include <ostream>

namespace forge::cli {

/// Runs the `forge` command line. Returns 0 on success, 1 when a mathematical
/// check fails, 2 on invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace forge::cli
