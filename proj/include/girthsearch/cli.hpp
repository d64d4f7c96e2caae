#pragma once

#include <iosfwd>

namespace girthsearch {

/// Dispatches one subcommand. Returns 0 on success, 1 on domain errors
/// (degenerate parameters, oracle budget refusal, bad input files) and 2 on
/// usage errors. Data goes to `out` (or the -o file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace girthsearch
