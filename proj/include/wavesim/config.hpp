#pragma once

// Scenario configuration: the full parameter set for one run, its defaults
// (the "paper-tables" profile), the dotted-key config-file format, and
// command-line overrides.

#include "wavesim/inverter.hpp"
#include "wavesim/solver.hpp"
#include "wavesim/source_chain.hpp"
#include "wavesim/zeta.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wavesim {

enum class Scenario { kFullChain, kZetaOnly, kInverterOnly, kSourceOnly, kDutySweep };

const char* scenario_name(Scenario s);
Scenario parse_scenario(const std::string& name);

/// Fixed sources for the stage-isolated scenarios.
struct StageParams {
    double vs_fixed = 30.0;   ///< ideal DC input for zeta_only [V]
    double vdc_fixed = 120.0; ///< ideal bus for inverter_only [V]
    double rload_dc = 15.0;   ///< resistive load on the Zeta output in zeta_only [ohm]
};

enum class PowerBoundary { kZetaInput, kPmsgTerminals };

struct AnalysisParams {
    int n_harmonics = 50;          ///< spectrum depth for THD (orders 2..n)
    int window_periods = 2;        ///< steady window length in fundamental periods
    double settle_rel_tol = 0.01;  ///< per-period mean drift threshold
    PowerBoundary power_boundary = PowerBoundary::kZetaInput;
};

enum class SweepMode { kAnalytic, kSimulated };

struct SweepParams {
    std::vector<double> d_values = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    SweepMode mode = SweepMode::kAnalytic;
};

struct ScenarioConfig {
    Scenario scenario = Scenario::kFullChain;
    WaveParams wave;
    PmsgParams pmsg;
    ZetaParams zeta;
    InverterParams inverter;
    SolverConfig solver;
    StageParams stage;
    AnalysisParams analysis;
    SweepParams sweep;
    std::string output_dir;
    std::vector<std::string> overrides; ///< raw --set key=value pairs, echoed in reports

    void validate() const;

    /// Electrical speed [rad/s] at time t (pole_pairs * mechanical speed).
    double omega_e(double t) const { return pmsg.pole_pairs * rotor_speed(t, wave); }

    /// Switching/fundamental periods the step grid must divide.
    std::vector<double> grid_periods() const;
};

/// Set one dotted key (e.g. "zeta.D") from its text value. Unknown keys and
/// malformed values throw ConfigError naming the key.
void set_config_key(ScenarioConfig& cfg, const std::string& key, const std::string& value);

/// Parse config-file text (key = value lines, '#' comments) onto `cfg`.
void apply_config_text(ScenarioConfig& cfg, const std::string& text);

/// Defaults (paper-tables profile) -> file at `path` (empty = skip) ->
/// `overrides` ("key=value" each), then validate.
ScenarioConfig load_config(const std::string& path,
                           const std::vector<std::string>& overrides);

/// Canonical text form of every key; re-parsing it reproduces the config.
std::string render_config(const ScenarioConfig& cfg);

} // namespace wavesim
