#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pogorelov {

/// Exit codes: 0 success / "yes", 1 "no" for yes-no queries, 2 input or usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs the command line `args` (args[0] is the program name).
int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace pogorelov
