#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace zagreb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `zagreb` invocation. args[0] is the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace zagreb::cli
