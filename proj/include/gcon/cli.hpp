#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcon {

enum ExitCode : int { exit_ok = 0, exit_invalid = 1, exit_failed = 2 };

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`; `render` reads its document from `in`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

}  // namespace gcon
