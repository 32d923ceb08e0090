#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "beamvar/scenarios.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "beamvar: constrained planar beam minimizers, split limits, and "
        "threshold sweeps"};

    std::string scenario_arg;
    beamvar::ScenarioConfig cfg;
    std::optional<double> b, k, lambda;

    app.add_option("scenario", scenario_arg,
                   "one of: global_min, local_min, euler_split, threshold, "
                   "constants, gamma_sweep, theta_jump")
        ->required();
    app.add_option("--b", b, "load density (> 0)");
    app.add_option("--k", k, "bending coefficient (> 0)");
    app.add_option("--lambda", lambda, "load ratio for the split scenarios");
    app.add_option("--n", cfg.grid_n, "grid cell count (default 1024)");
    app.add_option("--eps-list", cfg.eps_list,
                   "comma-separated strictly decreasing barrier shifts")
        ->delimiter(',');
    app.add_option("--seed", cfg.seed, "perturbation audit seed (default 1)");
    app.add_option("--out", cfg.output_dir, "output directory (default .)");
    app.add_option("--lo", cfg.lo, "threshold bracket lower end (default 15)");
    app.add_option("--hi", cfg.hi,
                   "threshold bracket upper end (default 100)");
    app.add_option("--threads", cfg.threads,
                   "sweep worker cap (default: BEAMVAR_THREADS or hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : beamvar::exit_config_error;
    }

    const auto sc = beamvar::scenario_from_name(scenario_arg);
    if (!sc) {
        std::cerr << "config error: unknown scenario: " << scenario_arg
                  << "\n";
        return beamvar::exit_config_error;
    }
    cfg.scenario = *sc;
    cfg.b = b;
    cfg.k = k;
    cfg.lambda = lambda;
    return beamvar::run_scenario(cfg);
}
