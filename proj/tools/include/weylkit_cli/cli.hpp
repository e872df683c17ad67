// cli.hpp — the command-line front end as a callable library, so the
// test suite can drive every subcommand in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylkit_cli {

/// Run the tool on `args` (excluding the program name), writing normal
/// output to `out` and diagnostics to `err`; `in` supplies stdin for
/// subcommands that read documents from a pipe.
///
/// Exit codes: 0 success / PASS verdicts, 1 FAIL or INFEASIBLE
/// verdicts, 2 usage or file errors.
int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err, std::istream& in);

}  // namespace weylkit_cli
