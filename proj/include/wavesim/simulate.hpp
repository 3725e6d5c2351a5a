#pragma once

// Whole-system transient solve: composes source chain, Zeta converter and
// inverter stage into one fixed-step RK4 run with per-step frozen switch
// states, and records the decimated waveform trace.

#include "wavesim/config.hpp"
#include "wavesim/solver.hpp"

namespace wavesim {

/// Integrate the configured scenario from zero initial electrical state.
/// Deterministic: identical configs produce bit-identical traces.
/// Throws SimulationError on non-finite state, ConfigError on an unalignable
/// step grid. duty_sweep is orchestrated by the runner, not here.
WaveformTrace integrate(const ScenarioConfig& cfg);

} // namespace wavesim
