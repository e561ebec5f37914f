#ifndef MSNL_CLI_COMMANDS_HPP_
#define MSNL_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace msnl::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitDivergence = 3;
inline constexpr int kExitShape = 4;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "MSNL_OUTPUT_DIR";

/// Runs the `msnl` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msnl::cli

#endif  // MSNL_CLI_COMMANDS_HPP_
