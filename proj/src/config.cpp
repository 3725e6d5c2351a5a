#include "wavesim/config.hpp"

#include "wavesim/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace wavesim {

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::kFullChain: return "full_chain";
        case Scenario::kZetaOnly: return "zeta_only";
        case Scenario::kInverterOnly: return "inverter_only";
        case Scenario::kSourceOnly: return "source_only";
        case Scenario::kDutySweep: return "duty_sweep";
    }
    return "?";
}

Scenario parse_scenario(const std::string& name) {
    if (name == "full_chain") return Scenario::kFullChain;
    if (name == "zeta_only") return Scenario::kZetaOnly;
    if (name == "inverter_only") return Scenario::kInverterOnly;
    if (name == "source_only") return Scenario::kSourceOnly;
    if (name == "duty_sweep") return Scenario::kDutySweep;
    throw ConfigError("scenario: unknown value '" + name +
                      "' (full_chain|zeta_only|inverter_only|source_only|duty_sweep)");
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected a number, got '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected an integer, got '" + value + "'");
    }
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError(key + ": expected a comma-separated list of numbers");
    return out;
}

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace

void set_config_key(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "scenario") { cfg.scenario = parse_scenario(value); return; }
    if (key == "output_dir") { cfg.output_dir = value; return; }

    if (key == "wave.H") { cfg.wave.H = parse_double(key, value); return; }
    if (key == "wave.T") { cfg.wave.T = parse_double(key, value); return; }
    if (key == "wave.Kgc") { cfg.wave.Kgc = parse_double(key, value); return; }
    if (key == "wave.k") { cfg.wave.wave_number = parse_double(key, value); return; }
    if (key == "wave.speed_mode") {
        if (value == "constant") cfg.wave.speed_mode = SpeedMode::kConstant;
        else if (value == "wave_modulated") cfg.wave.speed_mode = SpeedMode::kWaveModulated;
        else throw ConfigError("wave.speed_mode: expected constant|wave_modulated");
        return;
    }
    if (key == "wave.omega_m0") { cfg.wave.omega_m0 = parse_double(key, value); return; }
    if (key == "wave.mod_depth") { cfg.wave.mod_depth = parse_double(key, value); return; }

    if (key == "pmsg.Rph") { cfg.pmsg.Rph = parse_double(key, value); return; }
    if (key == "pmsg.La") { cfg.pmsg.La = parse_double(key, value); return; }
    if (key == "pmsg.lambda") { cfg.pmsg.lambda = parse_double(key, value); return; }
    if (key == "pmsg.pole_pairs") { cfg.pmsg.pole_pairs = parse_int(key, value); return; }

    if (key == "zeta.L1") { cfg.zeta.L1 = parse_double(key, value); return; }
    if (key == "zeta.L2") { cfg.zeta.L2 = parse_double(key, value); return; }
    if (key == "zeta.C1") { cfg.zeta.C1 = parse_double(key, value); return; }
    if (key == "zeta.C2") { cfg.zeta.C2 = parse_double(key, value); return; }
    if (key == "zeta.D") { cfg.zeta.D = parse_double(key, value); return; }
    if (key == "zeta.fs") { cfg.zeta.fs = parse_double(key, value); return; }
    if (key == "zeta.Ron") { cfg.zeta.Ron = parse_double(key, value); return; }
    if (key == "zeta.Vf") { cfg.zeta.Vf = parse_double(key, value); return; }

    if (key == "inverter.M") { cfg.inverter.M = parse_double(key, value); return; }
    if (key == "inverter.f_out") { cfg.inverter.f_out = parse_double(key, value); return; }
    if (key == "inverter.f_carrier") { cfg.inverter.f_carrier = parse_double(key, value); return; }
    if (key == "inverter.Lf") { cfg.inverter.Lf = parse_double(key, value); return; }
    if (key == "inverter.Cf") { cfg.inverter.Cf = parse_double(key, value); return; }
    if (key == "inverter.Rload") { cfg.inverter.Rload = parse_double(key, value); return; }
    if (key == "inverter.modulation") {
        if (value == "bipolar") cfg.inverter.modulation = Modulation::kBipolar;
        else if (value == "unipolar") cfg.inverter.modulation = Modulation::kUnipolar;
        else throw ConfigError("inverter.modulation: expected bipolar|unipolar");
        return;
    }

    if (key == "solver.dt") { cfg.solver.dt = parse_double(key, value); return; }
    if (key == "solver.t_end") { cfg.solver.t_end = parse_double(key, value); return; }
    if (key == "solver.record_every") {
        const int n = parse_int(key, value);
        if (n < 1) throw ConfigError("solver.record_every must be >= 1");
        cfg.solver.record_every = static_cast<std::uint32_t>(n);
        return;
    }
    if (key == "solver.t_record_start") { cfg.solver.t_record_start = parse_double(key, value); return; }

    if (key == "stage.vs_fixed") { cfg.stage.vs_fixed = parse_double(key, value); return; }
    if (key == "stage.vdc_fixed") { cfg.stage.vdc_fixed = parse_double(key, value); return; }
    if (key == "stage.rload_dc") { cfg.stage.rload_dc = parse_double(key, value); return; }

    if (key == "analysis.n_harmonics") { cfg.analysis.n_harmonics = parse_int(key, value); return; }
    if (key == "analysis.window_periods") { cfg.analysis.window_periods = parse_int(key, value); return; }
    if (key == "analysis.settle_rel_tol") { cfg.analysis.settle_rel_tol = parse_double(key, value); return; }
    if (key == "analysis.power_boundary") {
        if (value == "zeta_input") cfg.analysis.power_boundary = PowerBoundary::kZetaInput;
        else if (value == "pmsg") cfg.analysis.power_boundary = PowerBoundary::kPmsgTerminals;
        else throw ConfigError("analysis.power_boundary: expected zeta_input|pmsg");
        return;
    }

    if (key == "sweep.d_values") { cfg.sweep.d_values = parse_double_list(key, value); return; }
    if (key == "sweep.mode") {
        if (value == "analytic") cfg.sweep.mode = SweepMode::kAnalytic;
        else if (value == "simulated") cfg.sweep.mode = SweepMode::kSimulated;
        else throw ConfigError("sweep.mode: expected analytic|simulated");
        return;
    }

    throw ConfigError("unknown config key '" + key + "'");
}

void apply_config_text(ScenarioConfig& cfg, const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        }
        set_config_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

ScenarioConfig load_config(const std::string& path,
                           const std::vector<std::string>& overrides) {
    ScenarioConfig cfg; // defaults are the paper-tables profile
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file '" + path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        apply_config_text(cfg, buf.str());
    }
    for (const auto& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got '" + ov + "'");
        set_config_key(cfg, trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)));
        cfg.overrides.push_back(ov);
    }
    cfg.validate();
    return cfg;
}

void ScenarioConfig::validate() const {
    wave.validate();
    pmsg.validate();
    zeta.validate();
    inverter.validate();
    solver.validate();
    if (!(stage.vs_fixed >= 0.0)) throw ConfigError("stage.vs_fixed must be >= 0");
    if (!(stage.vdc_fixed >= 0.0)) throw ConfigError("stage.vdc_fixed must be >= 0");
    if (!(stage.rload_dc > 0.0)) throw ConfigError("stage.rload_dc must be > 0");
    if (analysis.n_harmonics < 2) throw ConfigError("analysis.n_harmonics must be >= 2");
    if (analysis.window_periods < 1) throw ConfigError("analysis.window_periods must be >= 1");
    if (!(analysis.settle_rel_tol > 0.0)) throw ConfigError("analysis.settle_rel_tol must be > 0");
    if (scenario == Scenario::kDutySweep) {
        if (sweep.d_values.empty()) throw ConfigError("sweep.d_values must not be empty");
        for (double d : sweep.d_values) {
            if (!(d > 0.0 && d < 1.0))
                throw ConfigError("sweep.d_values: every duty must lie in (0,1)");
        }
    }
}

std::vector<double> ScenarioConfig::grid_periods() const {
    std::vector<double> periods;
    const bool zeta_active = scenario == Scenario::kFullChain ||
                             scenario == Scenario::kZetaOnly ||
                             scenario == Scenario::kDutySweep;
    const bool inverter_active = scenario == Scenario::kFullChain ||
                                 scenario == Scenario::kInverterOnly;
    if (zeta_active) periods.push_back(1.0 / zeta.fs);
    if (inverter_active) {
        periods.push_back(1.0 / inverter.f_carrier);
        periods.push_back(1.0 / inverter.f_out);
    }
    return periods;
}

std::string render_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "scenario = " << scenario_name(cfg.scenario) << "\n";
    out << "output_dir = " << cfg.output_dir << "\n";
    out << "wave.H = " << format_double(cfg.wave.H) << "\n";
    out << "wave.T = " << format_double(cfg.wave.T) << "\n";
    out << "wave.Kgc = " << format_double(cfg.wave.Kgc) << "\n";
    out << "wave.k = " << format_double(cfg.wave.wave_number) << "\n";
    out << "wave.speed_mode = "
        << (cfg.wave.speed_mode == SpeedMode::kConstant ? "constant" : "wave_modulated") << "\n";
    out << "wave.omega_m0 = " << format_double(cfg.wave.omega_m0) << "\n";
    out << "wave.mod_depth = " << format_double(cfg.wave.mod_depth) << "\n";
    out << "pmsg.Rph = " << format_double(cfg.pmsg.Rph) << "\n";
    out << "pmsg.La = " << format_double(cfg.pmsg.La) << "\n";
    out << "pmsg.lambda = " << format_double(cfg.pmsg.lambda) << "\n";
    out << "pmsg.pole_pairs = " << cfg.pmsg.pole_pairs << "\n";
    out << "zeta.L1 = " << format_double(cfg.zeta.L1) << "\n";
    out << "zeta.L2 = " << format_double(cfg.zeta.L2) << "\n";
    out << "zeta.C1 = " << format_double(cfg.zeta.C1) << "\n";
    out << "zeta.C2 = " << format_double(cfg.zeta.C2) << "\n";
    out << "zeta.D = " << format_double(cfg.zeta.D) << "\n";
    out << "zeta.fs = " << format_double(cfg.zeta.fs) << "\n";
    out << "zeta.Ron = " << format_double(cfg.zeta.Ron) << "\n";
    out << "zeta.Vf = " << format_double(cfg.zeta.Vf) << "\n";
    out << "inverter.M = " << format_double(cfg.inverter.M) << "\n";
    out << "inverter.f_out = " << format_double(cfg.inverter.f_out) << "\n";
    out << "inverter.f_carrier = " << format_double(cfg.inverter.f_carrier) << "\n";
    out << "inverter.Lf = " << format_double(cfg.inverter.Lf) << "\n";
    out << "inverter.Cf = " << format_double(cfg.inverter.Cf) << "\n";
    out << "inverter.Rload = " << format_double(cfg.inverter.Rload) << "\n";
    out << "inverter.modulation = "
        << (cfg.inverter.modulation == Modulation::kBipolar ? "bipolar" : "unipolar") << "\n";
    out << "solver.dt = " << format_double(cfg.solver.dt) << "\n";
    out << "solver.t_end = " << format_double(cfg.solver.t_end) << "\n";
    out << "solver.record_every = " << cfg.solver.record_every << "\n";
    out << "solver.t_record_start = " << format_double(cfg.solver.t_record_start) << "\n";
    out << "stage.vs_fixed = " << format_double(cfg.stage.vs_fixed) << "\n";
    out << "stage.vdc_fixed = " << format_double(cfg.stage.vdc_fixed) << "\n";
    out << "stage.rload_dc = " << format_double(cfg.stage.rload_dc) << "\n";
    out << "analysis.n_harmonics = " << cfg.analysis.n_harmonics << "\n";
    out << "analysis.window_periods = " << cfg.analysis.window_periods << "\n";
    out << "analysis.settle_rel_tol = " << format_double(cfg.analysis.settle_rel_tol) << "\n";
    out << "analysis.power_boundary = "
        << (cfg.analysis.power_boundary == PowerBoundary::kZetaInput ? "zeta_input" : "pmsg") << "\n";
    out << "sweep.d_values = ";
    for (std::size_t i = 0; i < cfg.sweep.d_values.size(); ++i) {
        if (i) out << ",";
        out << format_double(cfg.sweep.d_values[i]);
    }
    out << "\n";
    out << "sweep.mode = "
        << (cfg.sweep.mode == SweepMode::kAnalytic ? "analytic" : "simulated") << "\n";
    return out.str();
}

} // namespace wavesim
