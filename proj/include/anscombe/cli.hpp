#pragma once

#include <iosfwd>

namespace anscombe {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFailure = 1,
  kExitParseError = 2,
  kExitParameterError = 3,
};

/// Entry point of the `anscombe` tool with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace anscombe
