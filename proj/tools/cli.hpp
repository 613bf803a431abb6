#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbowlab::cli {

enum ExitCode : int {
    kOk = 0,
    kPreconditionOrParse = 1,
    kBudgetRefused = 2,
    kDiscrepancy = 3,
    kCertificationFailed = 4,
};

// Runs one command line (args[0] is the program name) and returns the exit
// status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbowlab::cli
