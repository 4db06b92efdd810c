#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mbd::cli {

/// Exit codes: 0 success, 1 computational error, 2 argument error.
inline constexpr int kOk = 0;
inline constexpr int kComputationError = 1;
inline constexpr int kArgumentError = 2;

/// Runs the command line `args` (args[0] is the program name). Output goes to
/// `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mbd::cli
