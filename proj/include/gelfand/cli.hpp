#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gelfand/report.hpp"

namespace gelfand {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// kExitOk when every check passed, else kExitFailure.
int exit_code_for(const Report& report);

/// Runs `gelfand <command> ...`; args excludes the program name.
/// Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gelfand
