#pragma once

// Steady-state summary of one run: gains, ripple, stresses, THD, efficiency,
// energy bookkeeping, and the structured warning list.

#include "wavesim/analysis.hpp"
#include "wavesim/config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wavesim {

struct RunWarning {
    std::string code;
    std::string message;
};

struct SummaryReport {
    std::string scenario;
    bool settled = false;
    double window_t_begin = 0.0;
    double window_t_end = 0.0;

    double v_rect_mean = 0.0;
    double v_zeta_mean = 0.0;
    double zeta_gain_measured = 0.0;
    double zeta_gain_analytic = 0.0;
    double ripple_zeta_out = 0.0;

    double v_load_fund_peak = 0.0;
    double i_load_fund_peak = 0.0;
    double v_load_peak_eq8 = 0.0;
    double thd_v = 0.0;
    double thd_i = 0.0;

    double efficiency = 0.0;
    EnergyAudit audit;

    double stress_sw_q1 = 0.0;
    double stress_diode = 0.0;
    double stress_s1 = 0.0;
    double stress_switch_predicted = 0.0;
    double stress_diode_predicted = 0.0;

    bool ccm_flag = false;
    std::uint64_t dcm_step_count = 0;

    std::vector<RunWarning> warnings;
};

/// Assemble the summary over the trailing steady window. A trace too short
/// for windowing degrades to whole-trace statistics plus a warning instead of
/// failing the run.
SummaryReport build_summary(const WaveformTrace& trace, const ScenarioConfig& cfg);

} // namespace wavesim
