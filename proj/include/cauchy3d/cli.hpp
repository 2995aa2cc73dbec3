#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cauchy3d {

/// Runs the command-line tool on `args` (without the program name).
/// Subcommands: solve, check, dump-layers. Returns the process exit code:
/// 0 ok, 1 negative verdict (check/--verify), 2 input error, 3 not solvable,
/// 4 singular system.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cauchy3d
