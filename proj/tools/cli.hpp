#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degree_forge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. `args` excludes the program name. Family input comes
// from --in or `in`; reports go to --out or `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace degree_forge::cli
