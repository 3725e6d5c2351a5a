#pragma once

// Fixed-step explicit integration core: step-size alignment so that every
// switching period is an integer number of steps, a classical RK4 update for
// the continuous state, and the recorded waveform trace.

#include "wavesim/errors.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wavesim {

// =============================================================================
// Solver configuration
// =============================================================================

struct SolverConfig {
    double dt = 1e-7;            ///< requested step size [s]; aligned before use
    double t_end = 0.3;          ///< simulated span [s]
    std::uint32_t record_every = 10;  ///< trace decimation factor
    double t_record_start = 0.0; ///< discard transient before this time [s]

    void validate() const;
};

/// Largest dt <= dt_requested such that every period in `periods` is an
/// integer multiple of dt (to within 1 part in 1e9). Periods are resolved on
/// a 1 ps integer grid, so the result is an exact common divisor of the
/// rounded periods. Throws ConfigError when no divisor of at least 1 ps fits.
double align_dt(double dt_requested, const std::vector<double>& periods);

// =============================================================================
// State vector
// =============================================================================

/// Index of each continuous state in the packed vector.
enum StateIndex : std::size_t {
    kIL1 = 0,   // Zeta input inductor current [A]
    kIL2,       // Zeta output inductor current [A]
    kVC1,       // Zeta coupling capacitor voltage [V]
    kVC2,       // Zeta output capacitor / DC bus voltage [V]
    kILf,       // inverter filter inductor current [A]
    kVCf,       // inverter filter capacitor (load) voltage [V]
    kThetaE,    // PMSG electrical angle [rad]
    kStateCount
};

using StateVector = std::array<double, kStateCount>;

/// Complete circuit state at one instant. The continuous fields live in `y`;
/// the freewheel-diode flag is discrete and held constant across a step.
struct CircuitState {
    StateVector y{};
    bool diode_conducting = false;

    double iL1() const { return y[kIL1]; }
    double iL2() const { return y[kIL2]; }
    double vC1() const { return y[kVC1]; }
    double vC2() const { return y[kVC2]; }
    double iLf() const { return y[kILf]; }
    double vCf() const { return y[kVCf]; }
    double theta_e() const { return y[kThetaE]; }

    bool all_finite() const {
        for (double v : y) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }
};

/// Wrap an angle into [0, 2*pi).
double wrap_angle(double theta);

// =============================================================================
// RK4 step
// =============================================================================

/// Classical 4th-order Runge-Kutta update of a continuous state vector.
/// `derivs(t, x)` must be smooth over [t, t+dt]; any switch or gate state the
/// caller bakes into `derivs` stays frozen for the whole step.
template <std::size_t N, typename F>
std::array<double, N> rk4_step(F&& derivs, const std::array<double, N>& x,
                               double t, double dt) {
    std::array<double, N> k1 = derivs(t, x);
    std::array<double, N> tmp;
    for (std::size_t i = 0; i < N; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    std::array<double, N> k2 = derivs(t + 0.5 * dt, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    std::array<double, N> k3 = derivs(t + 0.5 * dt, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = x[i] + dt * k3[i];
    std::array<double, N> k4 = derivs(t + dt, tmp);
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

// =============================================================================
// Waveform trace
// =============================================================================

/// Recorded signal columns. Order matches the CSV layout.
enum Signal : std::size_t {
    kSigEa = 0, kSigEb, kSigEc,
    kSigVRect, kSigIdc, kSigGateQ1,
    kSigIL1, kSigIL2, kSigVC1, kSigVC2,
    kSigVZetaOut, kSigVSwQ1, kSigVDiode,
    kSigGateS1, kSigVInvRaw, kSigIInvRaw, kSigIInvDc, kSigVS1,
    kSigVLoad, kSigILoad,
    kSigPIn, kSigPOut,
    kSigEIn, kSigEOut,     // cumulative energies, integrated at full dt
    kSigDcmCum,            // cumulative count of DCM steps
    kSignalCount
};

/// CSV header name (unit-annotated) for each signal column.
const char* signal_name(Signal s);

/// Uniformly sampled, decimated time series of every recorded signal.
/// All columns have equal length; t is strictly increasing with spacing
/// dt * record_every.
struct WaveformTrace {
    std::vector<double> t;
    std::array<std::vector<double>, kSignalCount> cols;
    double dt_sample = 0.0;       ///< spacing of recorded samples [s]
    double fundamental_hz = 50.0; ///< inverter fundamental, used for windows

    std::size_t size() const { return t.size(); }
    const std::vector<double>& col(Signal s) const { return cols[s]; }

    void reserve(std::size_t n) {
        t.reserve(n);
        for (auto& c : cols) c.reserve(n);
    }
};

} // namespace wavesim
