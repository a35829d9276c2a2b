#pragma once

#include <iosfwd>

namespace pivots {

// Full command-line surface; returns the process exit status.
// 0 = success, 1 = mathematically inapplicable request or failed
// verification, 2 = input problem.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pivots
