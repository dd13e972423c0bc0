#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace multirel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitLawFails = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `mrel` invocation; args exclude the program name.
///
/// Subcommands: lift, compose, table, check, sweep, closure (up|union), pfns.
/// Exit 0 on success, 1 when a checked law fails, 2 on usage or input errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace multirel::cli
