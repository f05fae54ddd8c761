#ifndef ISK4LAB_TOOLS_CLI_HPP
#define ISK4LAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace isk4lab::cli {

/// Exit statuses shared by every subcommand.
enum Exit : int {
    kOk = 0,
    kNotFound = 1,
    kError = 2,
    kBoundExceeded = 3,
    kCounterwitness = 4,
};

/// Runs one invocation. args excludes the program name; `in` backs "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace isk4lab::cli

#endif // ISK4LAB_TOOLS_CLI_HPP
