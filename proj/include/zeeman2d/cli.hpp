#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zeeman2d::cli {

enum ExitCode { Ok = 0, ValidationFailed = 1, UsageError = 2 };

/// Runs the command line `args` (without the program name). Normal output goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Markdown rendering of the ten reference rows; identical on every call.
std::string table1_markdown();

}  // namespace zeeman2d::cli
