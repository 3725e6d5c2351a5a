// Command-line front end: run | sweep | analyze | print-config.

#include "wavesim/config.hpp"
#include "wavesim/errors.hpp"
#include "wavesim/runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> sets;
    std::string out_dir;
    double t_end = -1.0;
    double dt = -1.0;
    std::string scenario;
};

void add_common(CLI::App* app, CommonArgs& args, bool with_out = true) {
    app->add_option("--config", args.config_path, "config file (key = value lines)");
    app->add_option("--set", args.sets, "override one key, e.g. --set zeta.D=0.8")
        ->take_all();
    if (with_out) {
        app->add_option("--out", args.out_dir,
                        "output directory (default: $WAVESIM_OUT or ./out)");
    }
    app->add_option("--t-end", args.t_end, "shorthand for --set solver.t_end=<s>");
    app->add_option("--dt", args.dt, "shorthand for --set solver.dt=<s>");
    app->add_option("--scenario", args.scenario, "shorthand for --set scenario=<name>");
}

wavesim::ScenarioConfig resolve_config(const CommonArgs& args) {
    std::vector<std::string> overrides = args.sets;
    if (!args.scenario.empty()) overrides.push_back("scenario=" + args.scenario);
    if (args.t_end > 0.0) overrides.push_back("solver.t_end=" + std::to_string(args.t_end));
    if (args.dt > 0.0) overrides.push_back("solver.dt=" + std::to_string(args.dt));
    return wavesim::load_config(args.config_path, overrides);
}

std::string resolve_out_dir(const CommonArgs& args) {
    if (!args.out_dir.empty()) return args.out_dir;
    if (const char* env = std::getenv("WAVESIM_OUT"); env && *env) return env;
    return "out";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wavesim - wave-powered two-stage boost inverter simulator"};
    app.require_subcommand(1);

    CommonArgs run_args;
    CLI::App* run_cmd = app.add_subcommand("run", "simulate one scenario and emit all outputs");
    add_common(run_cmd, run_args);

    CommonArgs sweep_args;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "duty-ratio gain sweep (fig19a data)");
    add_common(sweep_cmd, sweep_args);

    CommonArgs analyze_args;
    std::string trace_path;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "recompute the summary from an existing trace CSV");
    add_common(analyze_cmd, analyze_args);
    analyze_cmd->add_option("--trace", trace_path, "trace.csv produced by `run`")->required();

    CommonArgs print_args;
    CLI::App* print_cmd = app.add_subcommand("print-config", "print the resolved configuration");
    add_common(print_cmd, print_args, /*with_out=*/false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const auto cfg = resolve_config(run_args);
            return wavesim::run_scenario(cfg, resolve_out_dir(run_args), std::cout);
        }
        if (sweep_cmd->parsed()) {
            CommonArgs args = sweep_args;
            args.scenario = "duty_sweep";
            const auto cfg = resolve_config(args);
            return wavesim::run_scenario(cfg, resolve_out_dir(args), std::cout);
        }
        if (analyze_cmd->parsed()) {
            const auto cfg = resolve_config(analyze_args);
            return wavesim::run_analyze(trace_path, cfg, resolve_out_dir(analyze_args),
                                        std::cout);
        }
        if (print_cmd->parsed()) {
            const auto cfg = resolve_config(print_args);
            std::cout << wavesim::render_config(cfg);
            return wavesim::kExitOk;
        }
    } catch (const wavesim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return wavesim::kExitConfigError;
    } catch (const wavesim::SimulationError& e) {
        std::cerr << "numerical abort: " << e.what() << "\n";
        return wavesim::kExitNumericalAbort;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return wavesim::kExitFailure;
    }
    return wavesim::kExitFailure;
}
