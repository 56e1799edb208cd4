#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhilbert::cli {

enum ExitCode : int {
    kSuccess = 0,
    kDomainFailure = 1,  // decode errors, round-trip mismatch
    kUsageError = 2,     // bad arguments, unreadable or malformed input
};

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhilbert::cli
