#pragma once

// Post-processing of recorded traces: steady-state windowing, basic stats,
// exact-bin harmonic analysis with THD, efficiency and energy bookkeeping,
// and the duty-ratio gain sweep.

#include "wavesim/config.hpp"
#include "wavesim/solver.hpp"

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wavesim {

// =============================================================================
// Windows
// =============================================================================

/// Half-open sample range [begin, end) of a trace, tagged with the outcome of
/// the settledness check.
struct Window {
    std::size_t begin = 0;
    std::size_t end = 0;
    bool settled = false;

    std::size_t size() const { return end - begin; }
};

/// Trailing window of `analysis.window_periods` fundamental periods, after
/// verifying that the signal's per-period mean moved by less than rel_tol
/// between the last two periods. For near-zero-mean (AC) signals the drift is
/// measured on the per-period RMS instead. Throws if the trace is shorter
/// than 4 fundamental periods.
Window steady_window(const WaveformTrace& trace, Signal signal, double rel_tol,
                     int window_periods = 2);

/// View of one signal over a window.
std::span<const double> window_view(const WaveformTrace& trace, Signal signal,
                                    const Window& w);

// =============================================================================
// Harmonic analysis
// =============================================================================

/// Rectangular-window spectrum at the exact harmonic bins k*f0. Amplitudes
/// are peak values; magnitudes[k-1] holds harmonic order k.
struct HarmonicSpectrum {
    double f0 = 0.0;
    double dc = 0.0;
    std::vector<double> magnitudes;
    double thd = 0.0; ///< sqrt(sum_{n>=2} mag_n^2) / mag_1

    double mag(int order) const { return magnitudes.at(static_cast<std::size_t>(order) - 1); }
};

/// Analyze a uniformly sampled signal spanning an exact integer number of
/// fundamental periods (checked; throws ConfigError otherwise, to prevent
/// spectral leakage).
HarmonicSpectrum fft_spectrum(std::span<const double> x, double dt, double f0,
                              int n_harmonics);

// =============================================================================
// Descriptive statistics
// =============================================================================

struct BasicStats {
    double mean = 0.0;
    double rms = 0.0;
    double ripple_pp = 0.0;
    double peak_abs = 0.0;
};

BasicStats basic_stats(std::span<const double> x);
BasicStats basic_stats(const WaveformTrace& trace, Signal signal, const Window& w);

// =============================================================================
// Power bookkeeping
// =============================================================================

struct EfficiencyResult {
    double value = 0.0;
    bool degenerate = false; ///< no input energy in the window
};

/// mean(p_out)/mean(p_in) over the window, computed from the cumulative
/// energy columns (exact step-resolution integrals, immune to decimation).
EfficiencyResult efficiency(const WaveformTrace& trace, const Window& w);

struct EnergyAudit {
    double input_J = 0.0;
    double output_J = 0.0;
    double stored_delta_J = 0.0;
    double residual_frac = 0.0; ///< |in - out - stored| / input
};

/// Conservation bookkeeping over a window: input energy minus output energy
/// against the change of energy stored in every L and C.
EnergyAudit energy_audit(const WaveformTrace& trace, const Window& w,
                         const ScenarioConfig& cfg);

// =============================================================================
// Duty-ratio sweep
// =============================================================================

struct SweepRow {
    double duty = 0.0;
    double zeta_gain_analytic = 0.0;
    double boost_gain_analytic = 0.0;
    std::optional<double> zeta_gain_simulated;
    bool ccm = false;
    bool settled = false;
    std::string error; ///< non-empty if the simulated point failed
};

/// Analytic gain table over cfg.sweep.d_values; in simulated mode each point
/// additionally runs a zeta_only integration (points fan out to a small
/// worker pool; results stay in input order).
std::vector<SweepRow> duty_sweep(const ScenarioConfig& cfg);

/// Count of DCM steps that occurred within a window (from the cumulative
/// trace column).
std::uint64_t dcm_steps_in_window(const WaveformTrace& trace, const Window& w);

} // namespace wavesim
