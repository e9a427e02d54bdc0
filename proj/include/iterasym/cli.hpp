#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace iterasym {

/// Exit codes: 0 success, 1 usage/validation/resource error, 2 verification
/// failure (verify, kindred).
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Runs the command line `args` (without the program name). Documents go to
/// `out` (or --output), diagnostics to `err`.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iterasym
