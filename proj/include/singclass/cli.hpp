#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singclass {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotFinite = 2;
inline constexpr int kExitInternal = 3;

/// Command-line entry point; `args` excludes the program name.
///
///   singclass <invariants|determinacy|split|classify|univariate|deform-scan|oracle|parse>
///             [--char P] [--vars x,y] [--truncate N] [--seed S] [--samples N]
///             [--json] [--file PATH] [POLY]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singclass
