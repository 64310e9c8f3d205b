#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tmra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNoConvergence = 3;

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out is given; error records go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tmra::cli
