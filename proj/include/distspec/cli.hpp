#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace distspec {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitIo = 3;

// Runs the command line given as argv[1..]; machine-readable output goes to
// out, diagnostics to err. DISTSPEC_TOL overrides the default tolerance of
// any subcommand that takes --tol.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distspec
