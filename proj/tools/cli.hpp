#pragma once

#include <iosfwd>

namespace polarbound::cli {

inline constexpr const char* kVersion = "0.1.0";

// Full command dispatch; returns the process exit code.
// 0 success, 2 input/domain error, 3 unsupported regime, 4 convergence failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polarbound::cli
