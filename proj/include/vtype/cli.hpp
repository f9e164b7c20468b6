#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vtype::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kUsageError = 2 };

/// Runs the tool with `args` (excluding the program name). Data goes to the
/// files named by --out, or to `out` where a command prints to stdout;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace vtype::cli
