#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flux::cli {

/// Exit codes: 0 success, 1 usage, syntax or I/O error, 2 type error,
/// 3 runtime error.
enum Exit { kOk = 0, kSyntax = 1, kType = 2, kRuntime = 3 };

/// Runs the command line in-process. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flux::cli
