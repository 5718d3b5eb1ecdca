#pragma once

#include <string>
#include <vector>

namespace binomint::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kSyntaxError = 2,
    kNonconvergence = 3,
};

struct CommandOutcome {
    int exit_code = kOk;
    std::string out;  ///< stdout payload
    std::string err;  ///< stderr payload
};

/// Runs one command line (without the program name), e.g.
/// {"--json", "classify", "(1 - x^2)^(1/2)"}. Never throws.
CommandOutcome run(const std::vector<std::string>& args);

/// Formats a real with 15 significant digits.
std::string format_real(double v);

}  // namespace binomint::cli
