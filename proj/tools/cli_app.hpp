#pragma once

#include <iosfwd>

namespace xstates::cli {

/// Runs the xstates command line. Exit codes: 0 success / all checks passed,
/// 1 verification failure, 2 input error (bad flags, malformed state files,
/// out-of-range tolerance overrides).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xstates::cli
