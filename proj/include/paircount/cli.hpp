#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paircount::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Optional environment override for the oracle limit.
inline constexpr const char* kOracleLimitEnv = "PAIRCOUNT_ORACLE_LIMIT";

/// Recurrence methods recurse once per unit of n.
inline constexpr int kRecurrenceLimit = 5000;

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paircount::cli
