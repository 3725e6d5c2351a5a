#include "wavesim/simulate.hpp"

#include "wavesim/errors.hpp"
#include "wavesim/inverter.hpp"
#include "wavesim/source_chain.hpp"
#include "wavesim/zeta.hpp"

#include <cmath>
#include <sstream>

namespace wavesim {

namespace {

/// Switch/gate/diode states sampled at a step boundary and frozen across it.
struct Frozen {
    bool gate_q1 = false;
    bool diode_on = false;
    GateQuad gates;
    bool dcm = false;
};

struct Observables {
    double ea = 0, eb = 0, ec = 0;
    double v_rect = 0, i_dc = 0;
    double v_zeta_out = 0, v_sw_q1 = 0, v_diode = 0;
    double vab = 0, i_inv = 0, v_s1 = 0;
    double v_load = 0, i_load = 0;
    double p_in = 0, p_out = 0;
};

bool zeta_active(Scenario s) {
    return s == Scenario::kFullChain || s == Scenario::kZetaOnly;
}

bool inverter_active(Scenario s) {
    return s == Scenario::kFullChain || s == Scenario::kInverterOnly;
}

bool source_active(Scenario s) {
    return s == Scenario::kFullChain || s == Scenario::kSourceOnly;
}

StateVector derivs(double t, const StateVector& y, const Frozen& fz,
                   const ScenarioConfig& cfg) {
    StateVector d{};
    const Scenario sc = cfg.scenario;

    double omega_e = 0.0;
    if (source_active(sc)) {
        omega_e = cfg.omega_e(t);
        d[kThetaE] = omega_e;
    }

    if (zeta_active(sc)) {
        double vs = 0.0;
        if (sc == Scenario::kZetaOnly) {
            vs = cfg.stage.vs_fixed;
        } else {
            const auto e = pmsg_emf(y[kThetaE], omega_e, cfg.pmsg);
            vs = rectifier_output(e[0], e[1], e[2],
                                  zeta_input_current(y, fz.gate_q1), cfg.pmsg);
        }
        const double i_out = (sc == Scenario::kZetaOnly)
                                 ? y[kVC2] / cfg.stage.rload_dc
                                 : inverter_input_current(fz.gates, y[kILf]);
        const ZetaDerivs zd =
            zeta_derivs(y, vs, fz.gate_q1, fz.diode_on, cfg.zeta, i_out);
        d[kIL1] = zd.diL1;
        d[kIL2] = zd.diL2;
        d[kVC1] = zd.dvC1;
        d[kVC2] = zd.dvC2;
    }

    if (inverter_active(sc)) {
        const double bus = (sc == Scenario::kInverterOnly) ? cfg.stage.vdc_fixed : y[kVC2];
        const double vab = hbridge_voltage(bus, fz.gates);
        const FilterDerivs fd = filter_derivs(y, vab, cfg.inverter);
        d[kILf] = fd.diLf;
        d[kVCf] = fd.dvCf;
    }

    return d;
}

Observables observe(double t, const StateVector& y, const Frozen& fz,
                    const ScenarioConfig& cfg) {
    Observables o;
    const Scenario sc = cfg.scenario;

    if (source_active(sc)) {
        const double omega_e = cfg.omega_e(t);
        const auto e = pmsg_emf(y[kThetaE], omega_e, cfg.pmsg);
        o.ea = e[0];
        o.eb = e[1];
        o.ec = e[2];
        o.i_dc = (sc == Scenario::kFullChain) ? zeta_input_current(y, fz.gate_q1) : 0.0;
        o.v_rect = rectifier_output(o.ea, o.eb, o.ec, o.i_dc, cfg.pmsg);
    }

    double vs = 0.0;
    if (sc == Scenario::kZetaOnly) {
        vs = cfg.stage.vs_fixed;
        o.i_dc = zeta_input_current(y, fz.gate_q1);
        o.v_rect = vs;
    } else if (sc == Scenario::kFullChain) {
        vs = o.v_rect;
    }

    if (zeta_active(sc)) {
        o.v_zeta_out = y[kVC2];
        o.v_sw_q1 = zeta_switch_voltage(y, vs, fz.gate_q1, fz.diode_on);
        o.v_diode = zeta_diode_voltage(y, vs, fz.gate_q1, fz.diode_on);
        switch (cfg.analysis.power_boundary) {
            case PowerBoundary::kZetaInput:
                o.p_in = vs * o.i_dc;
                break;
            case PowerBoundary::kPmsgTerminals:
                // Terminal power of the two conducting phases, upstream of Rph.
                o.p_in = (sc == Scenario::kFullChain)
                             ? (o.v_rect + 2.0 * cfg.pmsg.Rph * o.i_dc) * o.i_dc
                             : vs * o.i_dc;
                break;
        }
    }

    if (inverter_active(sc)) {
        const double bus = (sc == Scenario::kInverterOnly) ? cfg.stage.vdc_fixed : y[kVC2];
        if (sc == Scenario::kInverterOnly) o.v_zeta_out = bus;
        o.vab = hbridge_voltage(bus, fz.gates);
        o.i_inv = inverter_input_current(fz.gates, y[kILf]);
        o.v_s1 = fz.gates.s1 ? 0.0 : bus;
        o.v_load = y[kVCf];
        o.i_load = y[kVCf] / cfg.inverter.Rload;
        o.p_out = y[kVCf] * y[kVCf] / cfg.inverter.Rload;
        if (sc == Scenario::kInverterOnly) o.p_in = bus * o.i_inv;
    } else if (sc == Scenario::kZetaOnly) {
        o.p_out = y[kVC2] * y[kVC2] / cfg.stage.rload_dc;
    }

    return o;
}

} // namespace

WaveformTrace integrate(const ScenarioConfig& cfg) {
    if (cfg.scenario == Scenario::kDutySweep) {
        throw ConfigError("integrate: duty_sweep is a multi-run scenario; use the runner");
    }

    const double dt = align_dt(cfg.solver.dt, cfg.grid_periods());
    const auto n_steps = static_cast<std::uint64_t>(std::llround(cfg.solver.t_end / dt));
    if (n_steps == 0) throw ConfigError("solver.t_end shorter than one step");
    const auto record_every = cfg.solver.record_every;

    WaveformTrace trace;
    trace.dt_sample = dt * record_every;
    trace.fundamental_hz = cfg.inverter.f_out;
    trace.reserve(static_cast<std::size_t>(n_steps / record_every) + 2);

    CircuitState state; // zero initial electrical state, theta_e = 0
    double e_in = 0.0;
    double e_out = 0.0;
    std::uint64_t dcm_steps = 0;
    const double t_rec0 = cfg.solver.t_record_start - 0.5 * dt;

    for (std::uint64_t n = 0; n <= n_steps; ++n) {
        const double t = static_cast<double>(n) * dt;

        Frozen fz;
        if (zeta_active(cfg.scenario)) {
            fz.gate_q1 = pwm_gate(t, cfg.zeta.fs, cfg.zeta.D);
            fz.diode_on = resolve_diode(state, fz.gate_q1);
            state.diode_conducting = fz.diode_on;
            fz.dcm = !fz.gate_q1 && !fz.diode_on;
            if (fz.dcm && n < n_steps) ++dcm_steps;
        }
        if (inverter_active(cfg.scenario)) {
            fz.gates = spwm_gates(t, cfg.inverter);
        }

        const Observables obs = observe(t, state.y, fz, cfg);

        if (n % record_every == 0 && t > t_rec0) {
            trace.t.push_back(t);
            trace.cols[kSigEa].push_back(obs.ea);
            trace.cols[kSigEb].push_back(obs.eb);
            trace.cols[kSigEc].push_back(obs.ec);
            trace.cols[kSigVRect].push_back(obs.v_rect);
            trace.cols[kSigIdc].push_back(obs.i_dc);
            trace.cols[kSigGateQ1].push_back(fz.gate_q1 ? 1.0 : 0.0);
            trace.cols[kSigIL1].push_back(state.y[kIL1]);
            trace.cols[kSigIL2].push_back(state.y[kIL2]);
            trace.cols[kSigVC1].push_back(state.y[kVC1]);
            trace.cols[kSigVC2].push_back(state.y[kVC2]);
            trace.cols[kSigVZetaOut].push_back(obs.v_zeta_out);
            trace.cols[kSigVSwQ1].push_back(obs.v_sw_q1);
            trace.cols[kSigVDiode].push_back(obs.v_diode);
            trace.cols[kSigGateS1].push_back(fz.gates.s1 ? 1.0 : 0.0);
            trace.cols[kSigVInvRaw].push_back(obs.vab);
            trace.cols[kSigIInvRaw].push_back(state.y[kILf]);
            trace.cols[kSigIInvDc].push_back(obs.i_inv);
            trace.cols[kSigVS1].push_back(obs.v_s1);
            trace.cols[kSigVLoad].push_back(obs.v_load);
            trace.cols[kSigILoad].push_back(obs.i_load);
            trace.cols[kSigPIn].push_back(obs.p_in);
            trace.cols[kSigPOut].push_back(obs.p_out);
            trace.cols[kSigEIn].push_back(e_in);
            trace.cols[kSigEOut].push_back(e_out);
            trace.cols[kSigDcmCum].push_back(static_cast<double>(dcm_steps));
        }

        if (n == n_steps) break;

        const StateVector next = rk4_step<kStateCount>(
            [&](double tt, const StateVector& yy) { return derivs(tt, yy, fz, cfg); },
            state.y, t, dt);

        // Trapezoidal power integrals at full step resolution; the end point
        // uses this step's frozen switch states, whose interval it closes.
        const Observables obs_end = observe(t + dt, next, fz, cfg);
        e_in += 0.5 * dt * (obs.p_in + obs_end.p_in);
        e_out += 0.5 * dt * (obs.p_out + obs_end.p_out);

        state.y = next;
        state.y[kThetaE] = wrap_angle(state.y[kThetaE]);
        if (!state.all_finite()) {
            std::ostringstream msg;
            msg << "integrate: non-finite state at t=" << t + dt << " s [iL1=" << state.y[kIL1]
                << " iL2=" << state.y[kIL2] << " vC1=" << state.y[kVC1]
                << " vC2=" << state.y[kVC2] << " iLf=" << state.y[kILf]
                << " vCf=" << state.y[kVCf] << "]";
            throw SimulationError(msg.str(), t + dt);
        }
    }

    return trace;
}

} // namespace wavesim
