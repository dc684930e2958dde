#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace analogy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCheckFailed = 2;
inline constexpr int kExitUsage = 64;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace analogy::cli
