#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmg {

/// Runs one command (solve, study or probe) against the given argument list,
/// writing human output to out and diagnostics to err.
///
/// Exit codes: 0 success/converged, 1 configuration or parse error,
/// 2 stopped at max_cycles, 3 divergence, 4 probe found no contraction.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmg
