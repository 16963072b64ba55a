#pragma once

#include <ostream>

namespace qmlab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kLoadError = 2;
inline constexpr int kInvariantViolation = 3;

// Entry point of the qmlab command. JSON goes to `out` (and to --json when
// given), human-readable tables to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmlab::cli
