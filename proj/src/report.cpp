#include "wavesim/report.hpp"

#include "wavesim/errors.hpp"
#include "wavesim/inverter.hpp"
#include "wavesim/zeta.hpp"

#include <cmath>
#include <sstream>

namespace wavesim {

namespace {

Signal window_signal(Scenario sc) {
    switch (sc) {
        case Scenario::kInverterOnly: return kSigVLoad;
        case Scenario::kSourceOnly: return kSigVRect;
        default: return kSigVZetaOut;
    }
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

} // namespace

SummaryReport build_summary(const WaveformTrace& trace, const ScenarioConfig& cfg) {
    SummaryReport rep;
    rep.scenario = scenario_name(cfg.scenario);
    const Scenario sc = cfg.scenario;

    Window w;
    bool window_ok = true;
    try {
        w = steady_window(trace, window_signal(sc), cfg.analysis.settle_rel_tol,
                          cfg.analysis.window_periods);
    } catch (const ConfigError& e) {
        window_ok = false;
        w = Window{0, trace.size(), false};
        rep.warnings.push_back({"analysis_window_short", e.what()});
    }
    rep.settled = w.settled;
    rep.window_t_begin = trace.t[w.begin];
    rep.window_t_end = trace.t[w.end - 1];
    if (!w.settled && window_ok) {
        rep.warnings.push_back(
            {"not_settled", "per-period drift exceeded " + fmt(cfg.analysis.settle_rel_tol) +
                                " in the trailing window"});
    }

    const bool zeta_on = sc == Scenario::kFullChain || sc == Scenario::kZetaOnly;
    const bool inverter_on = sc == Scenario::kFullChain || sc == Scenario::kInverterOnly;
    const bool source_on = sc == Scenario::kFullChain || sc == Scenario::kSourceOnly;

    if (source_on) {
        rep.v_rect_mean = basic_stats(trace, kSigVRect, w).mean;
    } else if (sc == Scenario::kZetaOnly) {
        rep.v_rect_mean = cfg.stage.vs_fixed;
    }

    if (zeta_on) {
        const BasicStats vz = basic_stats(trace, kSigVZetaOut, w);
        rep.v_zeta_mean = vz.mean;
        rep.ripple_zeta_out = vz.ripple_pp;
        rep.zeta_gain_analytic = zeta_dc_gain(cfg.zeta.D);
        if (rep.v_rect_mean > 0.0) {
            rep.zeta_gain_measured = rep.v_zeta_mean / rep.v_rect_mean;
        }
        rep.stress_sw_q1 = basic_stats(trace, kSigVSwQ1, w).peak_abs;
        rep.stress_diode = basic_stats(trace, kSigVDiode, w).peak_abs;
        const StressPrediction sp = stress_predictions(cfg.zeta, rep.v_rect_mean);
        rep.stress_switch_predicted = sp.switch_stress;
        rep.stress_diode_predicted = sp.diode_stress;

        rep.dcm_step_count =
            static_cast<std::uint64_t>(trace.col(kSigDcmCum)[trace.size() - 1]);
        rep.ccm_flag = dcm_steps_in_window(trace, w) == 0;
        if (rep.dcm_step_count > 0) {
            rep.warnings.push_back(
                {"dcm_entered", "freewheel diode current reached zero during " +
                                    std::to_string(rep.dcm_step_count) + " steps"});
        }
        if (std::abs(cfg.zeta.D - 0.697) < 5e-4) {
            rep.warnings.push_back(
                {"paper_duty_gain_mismatch",
                 "duty 0.697 gives DC gain D/(1-D) = 2.30, so a 30 V input boosts to "
                 "~69 V; reaching 120 V requires D = 0.8"});
        }
    }

    if (inverter_on) {
        if (window_ok) {
            const HarmonicSpectrum sv = fft_spectrum(window_view(trace, kSigVLoad, w),
                                                     trace.dt_sample, trace.fundamental_hz,
                                                     cfg.analysis.n_harmonics);
            const HarmonicSpectrum si = fft_spectrum(window_view(trace, kSigILoad, w),
                                                     trace.dt_sample, trace.fundamental_hz,
                                                     cfg.analysis.n_harmonics);
            rep.v_load_fund_peak = sv.mag(1);
            rep.i_load_fund_peak = si.mag(1);
            rep.thd_v = sv.thd;
            rep.thd_i = si.thd;
        }
        rep.stress_s1 = basic_stats(trace, kSigVS1, w).peak_abs;

        if (sc == Scenario::kFullChain) {
            rep.v_load_peak_eq8 = predicted_peak_eq8(
                cfg.inverter.M, zeta_dc_gain(cfg.zeta.D), rep.v_rect_mean);
        } else {
            rep.v_load_peak_eq8 =
                predicted_peak_eq8(cfg.inverter.M, 1.0, cfg.stage.vdc_fixed);
        }
        if (rep.v_load_fund_peak > 0.0 && rep.v_load_peak_eq8 > 0.0) {
            const double ratio = rep.v_load_fund_peak / rep.v_load_peak_eq8;
            if (std::abs(ratio - 1.0) > 0.1) {
                rep.warnings.push_back(
                    {"eq8_vs_simulated_mismatch",
                     "printed peak formula M*B*Vs/sqrt(2) predicts " + fmt(rep.v_load_peak_eq8) +
                         " V but the simulated fundamental peak is " + fmt(rep.v_load_fund_peak) +
                         " V (ratio " + fmt(ratio) + ", consistent with M*B*Vs)"});
            }
        }
    }

    if (zeta_on || inverter_on) {
        const EfficiencyResult eff = efficiency(trace, w);
        rep.efficiency = eff.value;
        if (eff.degenerate) {
            rep.warnings.push_back(
                {"efficiency_degenerate", "no input energy in the window; efficiency "
                                          "reported as 0 by convention"});
        } else if (eff.value > 1.0) {
            rep.warnings.push_back(
                {"efficiency_above_unity",
                 "efficiency " + fmt(eff.value) +
                     " exceeds 1; stored energy drained over the window" +
                     (eff.value > 1.02 ? " (beyond the 1.02 bookkeeping rail)" : "")});
        }
        rep.audit = energy_audit(trace, w, cfg);
    }

    return rep;
}

} // namespace wavesim
