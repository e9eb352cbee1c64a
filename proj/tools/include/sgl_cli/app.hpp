#pragma once

#include <iosfwd>

namespace sgl::cli {

enum ExitCode : int { exit_ok = 0, exit_validation = 1, exit_solver = 2 };

/// Parses argv, runs one subcommand and writes its artifacts. Diagnostics
/// go to `err` as one line per failure; summaries go to `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgl::cli
