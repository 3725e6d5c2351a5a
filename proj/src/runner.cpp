#include "wavesim/runner.hpp"

#include "wavesim/errors.hpp"
#include "wavesim/io.hpp"
#include "wavesim/report.hpp"
#include "wavesim/simulate.hpp"

#include <filesystem>
#include <span>

namespace wavesim {

namespace fs = std::filesystem;

namespace {

class Emitter {
public:
    explicit Emitter(std::string dir) : dir_(std::move(dir)) {
        fs::create_directories(dir_);
    }

    std::string path(const std::string& name) const { return (fs::path(dir_) / name).string(); }

    void text(const std::string& name, const std::string& content) {
        write_text_file(path(name), content);
        files_.push_back(name);
    }

    void trace(const std::string& name, const WaveformTrace& tr) {
        write_trace_csv(path(name), tr);
        files_.push_back(name);
    }

    void table(const std::string& name, const std::vector<std::string>& headers,
               const std::vector<std::span<const double>>& cols) {
        write_table_csv(path(name), headers, cols);
        files_.push_back(name);
    }

    void remove_all_emitted() {
        for (const auto& f : files_) {
            std::error_code ec;
            fs::remove(fs::path(dir_) / f, ec);
        }
        files_.clear();
    }

    const std::vector<std::string>& files() const { return files_; }

private:
    std::string dir_;
    std::vector<std::string> files_;
};

void emit_figures(Emitter& em, const WaveformTrace& tr, const ScenarioConfig& cfg,
                  bool window_ok, const Window& w) {
    const Scenario sc = cfg.scenario;
    const bool source_on = sc == Scenario::kFullChain || sc == Scenario::kSourceOnly;
    const bool zeta_on = sc == Scenario::kFullChain || sc == Scenario::kZetaOnly;
    const bool inverter_on = sc == Scenario::kFullChain || sc == Scenario::kInverterOnly;

    auto col = [&](Signal s) { return std::span<const double>(tr.col(s)); };
    const std::span<const double> t(tr.t);

    if (source_on) {
        em.table("fig07_pmsg_voltage.csv", {"t_s", "ea_V", "eb_V", "ec_V"},
                 {t, col(kSigEa), col(kSigEb), col(kSigEc)});
        em.table("fig08_rectifier_voltage.csv", {"t_s", "v_rect_V"}, {t, col(kSigVRect)});
    }
    if (zeta_on) {
        em.table("fig09_zeta_output_voltage.csv", {"t_s", "v_zeta_out_V"},
                 {t, col(kSigVZetaOut)});
        em.table("fig10_diode_stress.csv", {"t_s", "v_diode_V"}, {t, col(kSigVDiode)});
        em.table("fig11_iL2_current.csv", {"t_s", "iL2_A"}, {t, col(kSigIL2)});
        em.table("fig12_iL1_current.csv", {"t_s", "iL1_A"}, {t, col(kSigIL1)});
        em.table("fig13_switch_stress.csv", {"t_s", "v_sw_q1_V"}, {t, col(kSigVSwQ1)});
    }
    if (inverter_on) {
        em.table("fig14_inverter_voltage_raw.csv", {"t_s", "v_inv_raw_V"},
                 {t, col(kSigVInvRaw)});
        em.table("fig15_inverter_current_raw.csv", {"t_s", "i_inv_raw_A"},
                 {t, col(kSigIInvRaw)});
        em.table("fig16_load_current.csv", {"t_s", "i_load_A"}, {t, col(kSigILoad)});
        em.table("fig17_s1_stress.csv", {"t_s", "v_s1_V"}, {t, col(kSigVS1)});
        em.table("fig18_load_voltage.csv", {"t_s", "v_load_V"}, {t, col(kSigVLoad)});

        if (window_ok) {
            const HarmonicSpectrum si =
                fft_spectrum(window_view(tr, kSigILoad, w), tr.dt_sample,
                             tr.fundamental_hz, cfg.analysis.n_harmonics);
            const HarmonicSpectrum sv =
                fft_spectrum(window_view(tr, kSigVLoad, w), tr.dt_sample,
                             tr.fundamental_hz, cfg.analysis.n_harmonics);
            std::vector<double> order(si.magnitudes.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<double>(i + 1);
            em.table("fig19b_current_harmonics.csv", {"harmonic_order", "magnitude_A"},
                     {order, si.magnitudes});
            em.table("fig19c_voltage_harmonics.csv", {"harmonic_order", "magnitude_V"},
                     {order, sv.magnitudes});
        }
    }
}

RunManifest make_manifest(const ScenarioConfig& cfg, const Emitter& em,
                          const std::vector<RunWarning>& warnings) {
    RunManifest m;
    m.scenario = scenario_name(cfg.scenario);
    m.config_echo = render_config(cfg);
    m.config_digest = "fnv1a64:" + fnv1a64_hex(m.config_echo);
    m.overrides = cfg.overrides;
    m.emitted_files = em.files();
    m.emitted_files.push_back("manifest.json"); // written below, listed too
    m.warnings = warnings;
    return m;
}

int run_sweep(const ScenarioConfig& cfg, Emitter& em, std::ostream& log) {
    const std::vector<SweepRow> rows = duty_sweep(cfg);

    std::vector<RunWarning> warnings;
    warnings.push_back(
        {"zeta_vs_boost_ordering",
         "for every duty in (0,1) the zeta gain D/(1-D) is strictly below the "
         "conventional boost gain 1/(1-D); both curves are emitted for comparison"});
    for (const auto& r : rows) {
        if (!r.error.empty()) {
            warnings.push_back({"sweep_point_failed",
                                "duty " + format_shortest(r.duty) + ": " + r.error});
        }
    }

    em.text("fig19a_gain_sweep.csv", sweep_to_csv(rows));
    em.text("sweep_summary.json", sweep_to_json(rows));
    const RunManifest m = make_manifest(cfg, em, warnings);
    em.text("manifest.json", manifest_to_json(m));

    for (const auto& r : rows) {
        log << "duty " << format_shortest(r.duty) << ": zeta " << r.zeta_gain_analytic
            << ", boost " << r.boost_gain_analytic;
        if (r.zeta_gain_simulated) log << ", simulated " << *r.zeta_gain_simulated;
        if (!r.error.empty()) log << ", FAILED: " << r.error;
        log << "\n";
    }
    return kExitOk;
}

} // namespace

int run_scenario(const ScenarioConfig& cfg, const std::string& out_dir, std::ostream& log) {
    Emitter em(out_dir);
    try {
        if (cfg.scenario == Scenario::kDutySweep) {
            return run_sweep(cfg, em, log);
        }

        const WaveformTrace trace = integrate(cfg);
        const SummaryReport rep = build_summary(trace, cfg);

        Window w{0, trace.size(), false};
        bool window_ok = true;
        try {
            w = steady_window(trace, kSigVLoad, cfg.analysis.settle_rel_tol,
                              cfg.analysis.window_periods);
        } catch (const ConfigError&) {
            window_ok = false;
        }

        em.trace("trace.csv", trace);
        em.text("summary.json", summary_to_json(rep));
        emit_figures(em, trace, cfg, window_ok, w);
        const RunManifest m = make_manifest(cfg, em, rep.warnings);
        em.text("manifest.json", manifest_to_json(m));

        log << "scenario " << rep.scenario << ": " << trace.size() << " samples, "
            << em.files().size() << " files in " << out_dir << "\n";
        for (const auto& warn : rep.warnings) {
            log << "warning [" << warn.code << "] " << warn.message << "\n";
        }
        return rep.settled ? kExitOk : kExitNotSettled;
    } catch (const SimulationError& e) {
        em.remove_all_emitted();
        log << "numerical abort: " << e.what() << "\n";
        return kExitNumericalAbort;
    }
}

int run_analyze(const std::string& trace_path, const ScenarioConfig& cfg,
                const std::string& out_dir, std::ostream& log) {
    const WaveformTrace trace = read_trace_csv(trace_path, cfg.inverter.f_out);
    const SummaryReport rep = build_summary(trace, cfg);

    Emitter em(out_dir);
    em.text("summary.json", summary_to_json(rep));
    const RunManifest m = make_manifest(cfg, em, rep.warnings);
    em.text("manifest.json", manifest_to_json(m));

    log << "analyzed " << trace_path << " (" << trace.size() << " samples)\n";
    for (const auto& warn : rep.warnings) {
        log << "warning [" << warn.code << "] " << warn.message << "\n";
    }
    return rep.settled ? kExitOk : kExitNotSettled;
}

} // namespace wavesim
