#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chromsym::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitError = 3;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, summaries and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromsym::cli
