#pragma once

#include <ostream>

namespace mtk::cli {

// Parses argv, runs one subcommand and returns the process exit code.
// Results go to `out` (or the --output file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mtk::cli
