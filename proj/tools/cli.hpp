#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitNumeric = 4;

/// Runs one command line (program name excluded). Output that is not sent
/// to --out goes to `out`; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmx::cli
