#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bckcode::cli {

enum ExitCode : int {
    kSuccess = 0,
    kPropertyFailure = 1,
    kInputError = 2,
    kInternalError = 3,
};

/// Runs the command line `args` (without the program name). Files named "-"
/// are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bckcode::cli
