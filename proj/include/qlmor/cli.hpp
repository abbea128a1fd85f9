#ifndef QLMOR_CLI_HPP
#define QLMOR_CLI_HPP

#include <ostream>

#include "qlmor/error.hpp"

namespace qlmor::cli
{

/// Process exit codes.
enum ExitCode : int
{
    kOk        = 0,
    kUsage     = 1, ///< bad command line or option values
    kData      = 2, ///< unreadable, malformed or inconsistent input files
    kNumerical = 3, ///< a numerical failure or a failed reproduction check
};

int exit_code_for(ErrorCode code) noexcept;

/// Subcommands: synth, sample, reduce, eval, repro. Diagnostics go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qlmor::cli

#endif // QLMOR_CLI_HPP
