#include "wavesim/zeta.hpp"

#include "wavesim/errors.hpp"

#include <cmath>

namespace wavesim {

void ZetaParams::validate() const {
    if (!(L1 > 0.0)) throw ConfigError("zeta.L1 must be > 0");
    if (!(L2 > 0.0)) throw ConfigError("zeta.L2 must be > 0");
    if (!(C1 > 0.0)) throw ConfigError("zeta.C1 must be > 0");
    if (!(C2 > 0.0)) throw ConfigError("zeta.C2 must be > 0");
    if (!(D > 0.0 && D < 1.0)) throw ConfigError("zeta.D must lie in (0,1)");
    if (!(fs > 0.0)) throw ConfigError("zeta.fs must be > 0");
    if (Ron < 0.0) throw ConfigError("zeta.Ron must be >= 0");
    if (Vf < 0.0) throw ConfigError("zeta.Vf must be >= 0");
}

bool pwm_gate(double t, double fs, double duty) {
    const double phase = t * fs;
    return (phase - std::floor(phase)) < duty;
}

bool resolve_diode(const CircuitState& state, bool gate_on) {
    if (gate_on) return false;
    return (state.iL1() + state.iL2()) > 0.0;
}

ZetaDerivs zeta_derivs(const StateVector& y, double vs, bool gate_on,
                       bool diode_on, const ZetaParams& zp, double i_out) {
    ZetaDerivs d;
    if (gate_on) {
        // Mode 1: switch conducts, diode blocks. Source charges both
        // inductors; C1 discharges into L2.
        const double v_sw_node = vs - zp.Ron * (y[kIL1] + y[kIL2]);
        d.diL1 = v_sw_node / zp.L1;
        d.diL2 = (v_sw_node + y[kVC1] - y[kVC2]) / zp.L2;
        d.dvC1 = -y[kIL2] / zp.C1;
        d.dvC2 = (y[kIL2] - i_out) / zp.C2;
    } else if (diode_on) {
        // Mode 2: diode clamps the freewheel node; both inductors discharge.
        d.diL1 = (-y[kVC1] - zp.Vf) / zp.L1;
        d.diL2 = (-y[kVC2] - zp.Vf) / zp.L2;
        d.dvC1 = y[kIL1] / zp.C1;
        d.dvC2 = (y[kIL2] - i_out) / zp.C2;
    } else {
        // DCM: freewheel path open, inductor currents frozen at iL1 = -iL2;
        // the load discharges C2 alone.
        d.diL1 = 0.0;
        d.diL2 = 0.0;
        d.dvC1 = 0.0;
        d.dvC2 = -i_out / zp.C2;
    }
    return d;
}

double zeta_switch_voltage(const StateVector& y, double vs, bool gate_on, bool diode_on) {
    if (gate_on) return 0.0;
    if (diode_on) return vs + y[kVC1];
    return vs; // DCM: the switch node floats at ground through the idle L1
}

double zeta_diode_voltage(const StateVector& y, double vs, bool gate_on, bool diode_on) {
    if (gate_on) return vs + y[kVC1];
    if (diode_on) return 0.0;
    return y[kVC1]; // DCM
}

double zeta_dc_gain(double duty) {
    if (!(duty > 0.0 && duty < 1.0))
        throw ConfigError("zeta_dc_gain: duty must lie in (0,1)");
    return duty / (1.0 - duty);
}

double boost_dc_gain(double duty) {
    if (!(duty > 0.0 && duty < 1.0))
        throw ConfigError("boost_dc_gain: duty must lie in (0,1)");
    return 1.0 / (1.0 - duty);
}

StressPrediction stress_predictions(const ZetaParams& zp, double vs) {
    const double off_state = vs / (1.0 - zp.D);
    return {off_state, off_state};
}

} // namespace wavesim
