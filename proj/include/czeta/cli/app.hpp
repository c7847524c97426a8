#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace czeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing
/// records to `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace czeta::cli
