#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace assign::cli {

// Stable exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitOperational = 2;
inline constexpr int kExitVerifyFailed = 3;

// Entry point shared by the assignbench executable and the tests. `args`
// excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace assign::cli
