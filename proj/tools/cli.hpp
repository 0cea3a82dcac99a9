#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umbral::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command (args exclude the program name), writing the document to
/// `out` and diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace umbral::cli
