#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symrep {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;        // success or affirmative verdict
inline constexpr int kExitNegative = 1;  // well-formed negative verdict
inline constexpr int kExitError = 2;     // input or usage error

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, error messages to `err`.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace symrep
