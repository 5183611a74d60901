#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geozeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;       // bad arguments, unreadable or invalid input
inline constexpr int kExitCheckFailed = 2;  // a check ran and did not hold

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geozeta::cli
