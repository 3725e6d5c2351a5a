#pragma once

// Bipolar SPWM H-bridge, LC output filter, and the printed-formula peak
// predictor it is compared against.

#include "wavesim/solver.hpp"

namespace wavesim {

enum class Modulation { kBipolar, kUnipolar };

struct InverterParams {
    double M = 1.0;          ///< modulation index, in [0,1]
    double f_out = 50.0;     ///< fundamental [Hz]
    double f_carrier = 1e5;  ///< triangle carrier [Hz]
    double Lf = 3e-3;        ///< filter inductance [H]
    double Cf = 20e-6;       ///< filter capacitance [F]
    double Rload = 15.0;     ///< load resistance [ohm]
    Modulation modulation = Modulation::kBipolar;

    void validate() const;
};

/// One H-bridge gate state per switch. Legs are always complementary
/// (s2 = !s1, s4 = !s3), so no shoot-through state can be emitted.
struct GateQuad {
    bool s1 = false;
    bool s2 = false;
    bool s3 = false;
    bool s4 = false;
};

/// Sine reference vs symmetric triangle carrier (trough at t=0, span [-1,1]).
/// Bipolar: r > c drives the (S1,S4) diagonal; otherwise (S2,S3).
/// Unipolar: leg B is switched from the negated reference.
GateQuad spwm_gates(double t, const InverterParams& ip);

/// Bridge output voltage for the given gates: +vdc on (S1,S4), -vdc on
/// (S2,S3), 0 on a freewheel pair (unipolar only). Throws on shoot-through.
double hbridge_voltage(double vdc, const GateQuad& g);

/// DC-side current drawn by the bridge from the bus; the i_out seen by the
/// Zeta output capacitor. Instantaneous power vdc*i_inv == vab*iLf exactly.
double inverter_input_current(const GateQuad& g, double iLf);

struct FilterDerivs {
    double diLf = 0.0;
    double dvCf = 0.0;
};

/// LC output filter with resistive load: diLf = (vab - vCf)/Lf,
/// dvCf = (iLf - vCf/Rload)/Cf.
FilterDerivs filter_derivs(const StateVector& y, double vab, const InverterParams& ip);

/// Peak AC output voltage predictor M*B*vs/sqrt(2), printed-formula form.
/// Reported beside the simulated fundamental peak, which lands near M*B*vs
/// for bipolar SPWM; the summary flags the ratio.
double predicted_peak_eq8(double M, double boost_factor, double vs);

} // namespace wavesim
