#include "wavesim/solver.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

namespace wavesim {

void SolverConfig::validate() const {
    if (!(dt > 0.0)) throw ConfigError("solver.dt must be > 0");
    if (!(t_end > dt)) throw ConfigError("solver.t_end must be > solver.dt");
    if (record_every < 1) throw ConfigError("solver.record_every must be >= 1");
    if (t_record_start < 0.0 || t_record_start >= t_end)
        throw ConfigError("solver.t_record_start must lie in [0, t_end)");
}

namespace {

constexpr double kTickHz = 1e12; // 1 ps resolution for the divisor search

std::uint64_t to_ticks(double seconds) {
    return static_cast<std::uint64_t>(std::llround(seconds * kTickHz));
}

} // namespace

double align_dt(double dt_requested, const std::vector<double>& periods) {
    if (!(dt_requested > 0.0)) throw ConfigError("align_dt: dt_requested must be > 0");
    for (double p : periods) {
        if (!(p > 0.0)) throw ConfigError("align_dt: all periods must be > 0");
    }
    if (periods.empty()) return dt_requested;

    // Common divisor search on an integer picosecond grid.
    std::uint64_t g = 0;
    for (double p : periods) {
        std::uint64_t ticks = to_ticks(p);
        if (ticks == 0) throw ConfigError("align_dt: period below 1 ps resolution");
        g = std::gcd(g, ticks);
    }
    // Tiny relative slack so that an exactly-representable divisor is not
    // rejected by floating-point round-down of dt_requested itself.
    const std::uint64_t limit =
        static_cast<std::uint64_t>(std::floor(dt_requested * kTickHz * (1.0 + 1e-9)));
    if (limit < 1 || g < 1) {
        throw ConfigError("align_dt: no common step of at least 1 ps fits below dt_requested");
    }

    // Largest divisor of g that is <= limit.
    std::uint64_t best = 0;
    for (std::uint64_t d = 1; d * d <= g; ++d) {
        if (g % d != 0) continue;
        if (d <= limit) best = std::max(best, d);
        const std::uint64_t q = g / d;
        if (q <= limit) best = std::max(best, q);
    }
    if (best == 0) {
        throw ConfigError("align_dt: no common step of at least 1 ps divides all periods");
    }
    double dt = static_cast<double>(best) / kTickHz;

    // Guard the 1e-9 relative contract on the original (unrounded) periods.
    for (double p : periods) {
        const double ratio = p / dt;
        if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio + 1e-9) {
            throw ConfigError("align_dt: rounding failed the 1e-9 alignment contract");
        }
    }
    return dt;
}

double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(theta, two_pi);
    if (w < 0.0) w += two_pi;
    return w;
}

const char* signal_name(Signal s) {
    switch (s) {
        case kSigEa: return "ea_V";
        case kSigEb: return "eb_V";
        case kSigEc: return "ec_V";
        case kSigVRect: return "v_rect_V";
        case kSigIdc: return "i_dc_A";
        case kSigGateQ1: return "gate_q1";
        case kSigIL1: return "iL1_A";
        case kSigIL2: return "iL2_A";
        case kSigVC1: return "vC1_V";
        case kSigVC2: return "vC2_V";
        case kSigVZetaOut: return "v_zeta_out_V";
        case kSigVSwQ1: return "v_sw_q1_V";
        case kSigVDiode: return "v_diode_V";
        case kSigGateS1: return "gate_s1";
        case kSigVInvRaw: return "v_inv_raw_V";
        case kSigIInvRaw: return "i_inv_raw_A";
        case kSigIInvDc: return "i_inv_dc_A";
        case kSigVS1: return "v_s1_V";
        case kSigVLoad: return "v_load_V";
        case kSigILoad: return "i_load_A";
        case kSigPIn: return "p_in_W";
        case kSigPOut: return "p_out_W";
        case kSigEIn: return "e_in_J";
        case kSigEOut: return "e_out_J";
        case kSigDcmCum: return "dcm_cum";
        default: return "?";
    }
}

} // namespace wavesim
