#include "wavesim/inverter.hpp"

#include "wavesim/errors.hpp"

#include <cmath>
#include <numbers>

namespace wavesim {

void InverterParams::validate() const {
    if (!(M >= 0.0 && M <= 1.0)) throw ConfigError("inverter.M must lie in [0,1]");
    if (!(f_out > 0.0)) throw ConfigError("inverter.f_out must be > 0");
    if (!(f_carrier >= 20.0 * f_out))
        throw ConfigError("inverter.f_carrier must be >= 20 * inverter.f_out");
    if (!(Lf > 0.0)) throw ConfigError("inverter.Lf must be > 0");
    if (!(Cf > 0.0)) throw ConfigError("inverter.Cf must be > 0");
    if (!(Rload > 0.0)) throw ConfigError("inverter.Rload must be > 0");
}

namespace {

/// Symmetric triangle in [-1,1] with a trough at t=0.
double carrier(double t, double fc) {
    const double phase = t * fc;
    const double ph = phase - std::floor(phase);
    return ph < 0.5 ? (-1.0 + 4.0 * ph) : (3.0 - 4.0 * ph);
}

} // namespace

GateQuad spwm_gates(double t, const InverterParams& ip) {
    const double r = ip.M * std::sin(2.0 * std::numbers::pi * ip.f_out * t);
    const double c = carrier(t, ip.f_carrier);
    GateQuad g;
    if (ip.modulation == Modulation::kBipolar) {
        const bool diag_a = r > c;
        g.s1 = diag_a;
        g.s4 = diag_a;
        g.s2 = !diag_a;
        g.s3 = !diag_a;
    } else {
        g.s1 = r > c;
        g.s2 = !g.s1;
        g.s3 = -r > c;
        g.s4 = !g.s3;
    }
    return g;
}

double hbridge_voltage(double vdc, const GateQuad& g) {
    if ((g.s1 && g.s2) || (g.s3 && g.s4) || (g.s1 == g.s2) || (g.s3 == g.s4)) {
        throw SimulationError("hbridge_voltage: non-complementary leg gates", 0.0);
    }
    if (g.s1 && g.s4) return vdc;
    if (g.s2 && g.s3) return -vdc;
    return 0.0; // freewheel pair (unipolar zero state)
}

double inverter_input_current(const GateQuad& g, double iLf) {
    if (g.s1 && g.s4) return iLf;
    if (g.s2 && g.s3) return -iLf;
    return 0.0;
}

FilterDerivs filter_derivs(const StateVector& y, double vab, const InverterParams& ip) {
    FilterDerivs d;
    d.diLf = (vab - y[kVCf]) / ip.Lf;
    d.dvCf = (y[kILf] - y[kVCf] / ip.Rload) / ip.Cf;
    return d;
}

double predicted_peak_eq8(double M, double boost_factor, double vs) {
    return M * boost_factor * vs / std::numbers::sqrt2;
}

} // namespace wavesim
