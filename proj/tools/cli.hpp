#pragma once

#include <iosfwd>

namespace edgeslide::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kBadInput = 2 };

/// Entry point of the `edgeslide` tool. Results go to files or `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edgeslide::cli
