#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cblab::cli {

// Exit codes: 0 ok, 1 a verification did not pass, 2 malformed input or a
// domain / precision error.
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

// Runs one invocation. `args` excludes the program name. Exactly one document
// (JSON, or CSV with --format csv) goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cblab::cli
