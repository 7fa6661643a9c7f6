#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permlab::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

/// Runs one command line (without the program name). Results go to `out`, diagnostics to
/// `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permlab::tools
