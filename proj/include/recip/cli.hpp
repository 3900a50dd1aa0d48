#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recip {

/// Exit codes of the command line front end.
enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one invocation; `args` excludes the program name. Output goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recip
