#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghostnum {

// Exit codes: 0 success, 1 a mathematical check failed, 2 bad usage or input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghostnum
