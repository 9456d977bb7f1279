#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace disc::cli
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitIo = 2;

/// Runs one `disc` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Consolidated text digest of verify reports and threshold/tv CSV files.
std::string digest(const std::vector<std::string>& paths);

}  // namespace disc::cli
