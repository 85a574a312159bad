#pragma once

#include <iosfwd>

namespace flipcube::cli {

// Exit codes for structured failures; anything else is 1.
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitBudget = 4;

/// Full CLI entry point; JSON on out, error JSON on err.  Kept out of
/// main() so the test suite can drive it in-process.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace flipcube::cli
