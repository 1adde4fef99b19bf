#ifndef SCROLLS_TOOLS_CLI_HPP
#define SCROLLS_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace scrolls::cli {

/// Exit statuses: 0 success (an invalid ValidityReport is still a success),
/// 1 domain error, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scrolls::cli

#endif  // SCROLLS_TOOLS_CLI_HPP
