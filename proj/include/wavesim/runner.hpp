#pragma once

// Scenario orchestration for the CLI: executes a run or sweep, emits trace,
// summary, per-figure plot data and the manifest, and maps failures onto the
// documented exit codes.

#include "wavesim/config.hpp"

#include <ostream>
#include <string>

namespace wavesim {

// Exit codes shared by the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // I/O or unexpected failure
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalAbort = 3;
inline constexpr int kExitNotSettled = 4;

/// Execute the configured scenario into out_dir. Writes every output file,
/// the manifest last; removes partial outputs on a numerical abort.
int run_scenario(const ScenarioConfig& cfg, const std::string& out_dir, std::ostream& log);

/// Re-run the analysis stage on an existing trace CSV.
int run_analyze(const std::string& trace_path, const ScenarioConfig& cfg,
                const std::string& out_dir, std::ostream& log);

} // namespace wavesim
