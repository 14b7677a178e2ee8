#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irack::cli {

inline constexpr int kOk = 0;
inline constexpr int kLawFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irack::cli
