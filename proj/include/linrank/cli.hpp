#ifndef LINRANK_CLI_HPP
#define LINRANK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace linrank {

// 0 proved / ok, 1 refuted / violation, 2 unknown / undecided, 3 usage or
// format error.
enum ExitCode : int {
    kExitOk = 0,
    kExitRefuted = 1,
    kExitUnknown = 2,
    kExitUsage = 3,
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace linrank

#endif
