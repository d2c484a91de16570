#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace loopspace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (program name excluded). Results go to out,
/// diagnostics to err. Returns 0 on success or pass, 1 on a failed check or
/// inconclusive certificate, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loopspace::cli
