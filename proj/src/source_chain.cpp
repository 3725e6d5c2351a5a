#include "wavesim/source_chain.hpp"

#include "wavesim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wavesim {

double WaveParams::omega() const { return 2.0 * std::numbers::pi / T; }

void WaveParams::validate() const {
    if (!(H > 0.0)) throw ConfigError("wave.H must be > 0");
    if (!(T > 0.0)) throw ConfigError("wave.T must be > 0");
    if (!(omega_m0 > 0.0)) throw ConfigError("wave.omega_m0 must be > 0");
    if (!(mod_depth >= 0.0 && mod_depth < 1.0))
        throw ConfigError("wave.mod_depth must lie in [0,1)");
}

void PmsgParams::validate() const {
    if (!(Rph > 0.0)) throw ConfigError("pmsg.Rph must be > 0");
    if (!(La > 0.0)) throw ConfigError("pmsg.La must be > 0");
    if (!(lambda > 0.0)) throw ConfigError("pmsg.lambda must be > 0");
    if (pole_pairs < 1) throw ConfigError("pmsg.pole_pairs must be a positive integer");
}

double wave_elevation(double t, const WaveParams& wp) {
    return 0.5 * wp.H * std::cos(wp.omega() * t);
}

double rotor_speed(double t, const WaveParams& wp) {
    if (wp.speed_mode == SpeedMode::kConstant) return wp.omega_m0;
    return wp.omega_m0 * (1.0 + wp.mod_depth * std::cos(wp.omega() * t));
}

std::array<double, 3> pmsg_emf(double theta_e, double omega_e, const PmsgParams& pm) {
    constexpr double third = 2.0 * std::numbers::pi / 3.0;
    const double peak = pm.lambda * omega_e;
    return {peak * std::cos(theta_e),
            peak * std::cos(theta_e - third),
            peak * std::cos(theta_e - 2.0 * third)};
}

double rectifier_output(double ea, double eb, double ec, double i_dc,
                        const PmsgParams& pm) {
    const double hi = std::max({ea, eb, ec});
    const double lo = std::min({ea, eb, ec});
    return std::max(0.0, hi - lo - 2.0 * pm.Rph * i_dc);
}

} // namespace wavesim
