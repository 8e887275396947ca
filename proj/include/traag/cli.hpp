#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace traag::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kParse = 2;
inline constexpr int kPrecondition = 3;
inline constexpr int kInternal = 4;
inline constexpr int kNegative = 10;

inline constexpr std::size_t kDefaultOracleCap = 200000;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace traag::cli
