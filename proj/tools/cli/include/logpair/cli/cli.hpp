#pragma once

#include <ostream>

namespace logpair::cli {

/// Entry point shared by the `logpair` executable and the in-process tests.
/// Returns 0 on success, 1 on input errors, 2 on internal failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace logpair::cli
