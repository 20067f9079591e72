#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. args excludes the program name. Records go to out,
/// diagnostics to err. Returns 0, 1 (a verification failed) or 2 (usage).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charrank::cli
