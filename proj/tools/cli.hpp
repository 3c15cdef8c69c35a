#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace privcalc::cli {

/// Exit status contract of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kAnsweredFalse = 1,  // eq / comply answered in the negative
    kInputError = 2,
};

/// Runs one invocation. argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace privcalc::cli
