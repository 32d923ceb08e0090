#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beamvar/fields.hpp"
#include "beamvar/grid.hpp"

namespace beamvar {

enum class Scenario {
    global_min,
    local_min,
    euler_split,
    threshold,
    constants,
    gamma_sweep,
    theta_jump,
};

struct ScenarioConfig {
    Scenario scenario = Scenario::global_min;
    std::optional<double> b;
    std::optional<double> k;
    std::optional<double> lambda;
    double lo = 15.0;   // threshold bracket
    double hi = 100.0;
    int grid_n = 1024;
    std::vector<double> eps_list;  // gamma_sweep only, strictly decreasing
    unsigned long long seed = 1;
    std::string output_dir = ".";
    int threads = 0;  // 0: use BEAMVAR_THREADS or hardware default
};

struct GammaSweepRow {
    double eps;
    double x_switch_eps;
    double sup_distance_to_eps0_minimizer;
    bool touched_at_switch;
};

// Artifact accumulator for one run. Tables become name.csv plus a
// gnuplot-ready name.dat, documents become name.json, and write() always
// emits manifest.json; bytes depend only on the stored content.
class Bundle {
  public:
    // columns are parallel vectors of equal length.
    void add_table(const std::string& name, std::vector<std::string> names,
                   std::vector<std::vector<double>> columns);
    void add_document(const std::string& name, std::string json_text);
    void write(const std::string& dir, const std::string& manifest_json) const;

  private:
    struct Table {
        std::string name;
        std::vector<std::string> names;
        std::vector<std::vector<double>> columns;
    };
    std::vector<Table> tables_;
    std::vector<std::pair<std::string, std::string>> documents_;
};

// Exit codes shared by run_scenario and the CLI.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failure = 1;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_solver_failure = 3;

// Validates the config, executes the named pipeline, writes CSV/JSON/dat
// artifacts plus manifest.json and summary.json under output_dir, and
// returns an exit code. Scenario-internal checks mirror the shipped
// acceptance suite.
int run_scenario(const ScenarioConfig& cfg);

// Constrained minimizers for each eps against the eps=0 minimizer;
// sup-distance of the piecewise-linear fields over the union of nodes.
std::vector<GammaSweepRow> gamma_sweep(const BeamParams& p,
                                       const std::vector<double>& eps_list,
                                       const Grid& g, int threads);

// Effective worker count: explicit argument wins, then BEAMVAR_THREADS, then
// hardware concurrency; always >= 1.
int effective_threads(int requested);

std::string scenario_name(Scenario s);
std::optional<Scenario> scenario_from_name(const std::string& name);

}  // namespace beamvar
