#ifndef SUMOD_CLI_HPP
#define SUMOD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sumod::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kHolds = 0,       ///< property holds / construction succeeded
    kFails = 1,       ///< property fails; a certificate is printed
    kUsage = 2,       ///< bad arguments or unreadable input
    kCapExceeded = 3, ///< an exhaustive search hit its size cap
};

/// Runs one verb. `args` excludes the program name. Machine output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumod::cli

#endif
