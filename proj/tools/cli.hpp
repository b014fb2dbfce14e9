#ifndef THG_TOOLS_CLI_HPP
#define THG_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace thg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thg::cli

#endif
