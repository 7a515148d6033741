#pragma once

#include <ostream>

namespace cuweno::cli {

/// Exit statuses returned by parse_and_dispatch.
inline constexpr int kOk = 0;
inline constexpr int kRuntimeFailure = 1;
inline constexpr int kUsage = 2;

/// Entry point of the `cuweno` driver. Subcommands: list, run, study, inspect.
/// Relative output paths resolve against $CUWENO_OUTPUT_DIR when it is set.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out,
                       std::ostream& err);

}  // namespace cuweno::cli
