#pragma once

#include <ostream>

namespace unineq::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kInputError = 2;

/// Runs one subcommand. JSON results go to `out`; diagnostics go to `err`
/// as a single JSON record.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unineq::cli
