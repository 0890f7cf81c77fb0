#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abatch {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitFalse = 1,
    kExitUnknown = 2,
    kExitUsage = 3,
};

/// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace abatch
