#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aeg {

/// Exit codes of the command-line driver.
enum ExitCode : int { kExitP1 = 0, kExitP2 = 1, kExitUnknown = 2, kExitInputError = 3 };

/// Runs one driver command; `args` excludes the program name. Commands:
/// solve, eval, reduce, gen and trace. Non-solving commands exit with 0 on
/// success; every failure caused by the input exits with kExitInputError.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aeg
