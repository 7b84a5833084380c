#ifndef HURZETA_TOOLS_CLI_HPP
#define HURZETA_TOOLS_CLI_HPP

#include <ostream>

namespace hurzeta::cli {

enum ExitCode : int
{
   kSuccess = 0,
   kDisagreement = 1,
   kDomainError = 2,
   kAccuracyFailure = 3,
   kInternalError = 4,
};

// Runs one command line; data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hurzeta::cli

#endif // HURZETA_TOOLS_CLI_HPP
