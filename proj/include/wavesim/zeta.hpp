#pragma once

// Switched state-space model of the Zeta converter, its trailing-edge PWM
// gate, and the analytic DC-gain / device-stress predictors.

#include "wavesim/solver.hpp"

namespace wavesim {

struct ZetaParams {
    double L1 = 1.6e-3;   ///< input inductor [H]
    double L2 = 1.6e-3;   ///< output inductor [H]
    double C1 = 0.159e-6; ///< coupling capacitor [F]
    double C2 = 4e-4;     ///< output capacitor [F]
    double D = 0.697;     ///< duty ratio, in (0,1)
    double fs = 1e5;      ///< switching frequency [Hz]
    double Ron = 0.0;     ///< optional switch on-resistance [ohm], 0 = ideal
    double Vf = 0.0;      ///< optional diode forward drop [V], 0 = ideal

    void validate() const;
};

/// Trailing-edge PWM: true iff frac(t*fs) < D. On a step grid aligned to the
/// switching period the measured on-fraction equals D up to one sample.
bool pwm_gate(double t, double fs, double duty);

/// Freewheel-diode state for the coming step, decided once per step boundary:
/// gate on -> off; gate off -> on iff the freewheel current iL1+iL2 > 0,
/// otherwise the converter has entered DCM.
bool resolve_diode(const CircuitState& state, bool gate_on);

struct ZetaDerivs {
    double diL1 = 0.0;
    double diL2 = 0.0;
    double dvC1 = 0.0;
    double dvC2 = 0.0;
};

/// Piecewise-smooth Zeta dynamics for the frozen (gate, diode) pair.
/// Mode 1 (gate on), mode 2 (gate off, diode on), or DCM (both off, inductor
/// currents frozen). `i_out` is the current drawn from the output node.
ZetaDerivs zeta_derivs(const StateVector& y, double vs, bool gate_on,
                       bool diode_on, const ZetaParams& zp, double i_out);

/// Instantaneous zeta input current (through the switch from the source).
inline double zeta_input_current(const StateVector& y, bool gate_on) {
    return gate_on ? (y[kIL1] + y[kIL2]) : 0.0;
}

/// Off-state voltage across the switch TQ1 for the frozen mode.
double zeta_switch_voltage(const StateVector& y, double vs, bool gate_on, bool diode_on);

/// Reverse voltage across the freewheel diode TD1 for the frozen mode.
double zeta_diode_voltage(const StateVector& y, double vs, bool gate_on, bool diode_on);

/// Ideal CCM DC gain D/(1-D). Domain error outside (0,1).
double zeta_dc_gain(double duty);

/// Conventional boost converter gain 1/(1-D), for the comparison sweep.
double boost_dc_gain(double duty);

/// Analytic CCM off-state stress prediction (vs + vo) for switch and diode.
struct StressPrediction {
    double switch_stress = 0.0;
    double diode_stress = 0.0;
};
StressPrediction stress_predictions(const ZetaParams& zp, double vs);

} // namespace wavesim
