#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latemb::cli {

// Exit code contract:
//   0 guaranteed / true      1 impossible / false
//   2 unknown / inconclusive 3 malformed input
//   4 internal assertion failure
constexpr int kExitGuaranteed = 0;
constexpr int kExitImpossible = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 3;
constexpr int kExitInternalError = 4;

/// Dispatches one invocation (args excludes the program name). All
/// output goes to the given streams; nothing is read from stdin, so
/// identical arguments always produce identical output.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace latemb::cli
