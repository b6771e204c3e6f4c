#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vval::cli {

/// Process exit codes.
enum ExitCode : int {
    ok = 0,
    invalid_input = 2,   ///< parse or validation error
    undefined = 3,       ///< zero-probability conditioning, total conflict
    usage = 4,
};

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vval::cli
