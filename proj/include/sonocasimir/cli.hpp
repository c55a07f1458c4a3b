#pragma once

// Command-line front end: spectrum, budget, validate and sweep subcommands.
// Exit codes: 0 ok, 1 validation failure, 2 usage error, 3 numerical failure,
// 4 partial sweep failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace sono::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitPartialSweep = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same as above with argv[0] supplied internally.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sono::cli
