#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace combex::cli {

// Exit codes.
inline constexpr int kSpecFound = 0;
inline constexpr int kMalformedInput = 1;
inline constexpr int kLimitsExhausted = 2;

// Runs the command line; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "132_1243" -> {{0,2,1}, {0,1,3,2}}.
std::vector<std::vector<int>> parse_basis(const std::string& text);

}  // namespace combex::cli
