#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace suita::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // a hard check failed or an iteration did not converge
inline constexpr int kUsage = 2;    // bad flags or a domain violation

// Environment variable overriding the default series tolerance (--tol wins).
inline constexpr const char* kTolEnv = "SUITA_TOL";

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// printf("%.10g"), the number format used by every output.
std::string format_number(double x);

}  // namespace suita::cli
