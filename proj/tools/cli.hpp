#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jsj::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

// Runs one subcommand. `args` excludes the program name. A path of "-"
// (or an omitted input) reads `in`; an omitted output path writes `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jsj::cli
