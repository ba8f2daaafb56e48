#pragma once

// The aqfock command-line tool as a function, so tests can drive it with
// captured streams.

#include <ostream>
#include <string>
#include <vector>

namespace aqfock::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aqfock::cli
