#pragma once

#include <ostream>

namespace arrcomb::cli {

/// Runs one command line. Exit codes: 0 success (all checks pass), 1 a
/// requested check failed, 2 usage or input error (error JSON on err).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arrcomb::cli
