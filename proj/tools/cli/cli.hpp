#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schlicht::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotMember = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

/// Parses the arguments (without the program name), runs one command and
/// returns the exit code. Data goes to `out` or the requested file,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schlicht::cli
