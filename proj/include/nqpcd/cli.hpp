#pragma once

#include <string>
#include <vector>

#include "nqpcd/solve_report.hpp"

namespace nqpcd::cli {

/// Trace CSV, one row per epoch or outer iteration:
/// `epoch,updates,time_sec,objective,residual` with shortest round-trip
/// decimals. Identical seeded runs reproduce every column but time_sec.
void write_trace(const std::vector<TraceRow>& trace, const std::string& path);

/// Command dispatcher behind the nqpcd binary. `args` excludes the program
/// name. Returns the process exit code: 0 for converged runs, 2 when a
/// budget ran out (outputs are still written), 1 for usage, IO, or
/// validation errors.
int run(const std::vector<std::string>& args);

}  // namespace nqpcd::cli
