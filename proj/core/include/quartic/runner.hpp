#pragma once

#include <ostream>

#include "quartic/config.hpp"
#include "quartic/report.hpp"
#include "quartic/verify.hpp"

namespace quartic {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitNumerical = 3 };

/// Run the configured experiment without writing anything.
ExperimentReport run_experiment(const ExperimentConfig& cfg, Workspace& ws);

/// Run, then write summary.json and replicates.csv into cfg.output_dir.
/// Returns kExitPass iff every asserted check passed.
int run(const ExperimentConfig& cfg, std::size_t workers, std::ostream& log);

}  // namespace quartic
