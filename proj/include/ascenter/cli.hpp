#pragma once

#include <iosfwd>

namespace ascenter::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kSchemaError = 2;
inline constexpr int kKindMismatch = 3;

// Parses argv and runs one subcommand. Tables go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ascenter::cli
