#pragma once

#include <string>
#include <vector>

namespace nilq::cli {

// Exit codes: 0 success/consistent, 1 usage or input error, 2 excluded
// verdict, 3 resource cap exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitExcluded = 2;
inline constexpr int kExitCap = 3;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

// Runs one command; argv excludes the program name. Output is deterministic
// byte-for-byte given the same inputs and flags.
CliResult run(const std::vector<std::string>& argv);

}  // namespace nilq::cli
