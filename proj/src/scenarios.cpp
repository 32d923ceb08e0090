#include "beamvar/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "beamvar/euler.hpp"
#include "beamvar/io.hpp"
#include "beamvar/model.hpp"
#include "beamvar/obstacle.hpp"
#include "beamvar/solver.hpp"
#include "beamvar/theta.hpp"
#include "parallel.hpp"

namespace beamvar {

namespace {

constexpr double kPi = 3.14159265358979323846;

using ojson = nlohmann::ordered_json;

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

// Named boolean checks; the scenario passes iff all of them hold.
struct CheckList {
    ojson checks = ojson::object();
    bool all = true;

    void add(const std::string& name, bool ok) {
        checks[name] = ok;
        all = all && ok;
    }

    int finish(ojson& summary) const {
        summary["checks"] = checks;
        summary["pass"] = all;
        return all ? exit_ok : exit_check_failure;
    }
};

// Piecewise-linear nodal interpolant evaluated at x (clamped to the span).
double interp_nodes(const std::vector<double>& xs,
                    const std::vector<double>& v, double x) {
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.begin()) return v.front();
    if (it == xs.end()) return v.back();
    const std::size_t i = static_cast<std::size_t>(it - xs.begin());
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return v[i - 1] + t * (v[i] - v[i - 1]);
}

std::string validate(const ScenarioConfig& cfg) {
    if (cfg.grid_n < 16) return "grid_n must be at least 16";
    if (cfg.b && !(*cfg.b > 0.0)) return "b must be positive";
    if (cfg.k && !(*cfg.k > 0.0)) return "k must be positive";
    if (cfg.lambda && !(*cfg.lambda > 0.0)) return "lambda must be positive";

    const bool needs_bk = cfg.scenario == Scenario::global_min ||
                          cfg.scenario == Scenario::local_min ||
                          cfg.scenario == Scenario::gamma_sweep ||
                          cfg.scenario == Scenario::theta_jump;
    if (needs_bk) {
        if (!cfg.b || !cfg.k)
            return scenario_name(cfg.scenario) + " requires both --b and --k";
        if (cfg.lambda)
            return scenario_name(cfg.scenario) +
                   " takes --b/--k, not --lambda";
    } else if (cfg.scenario == Scenario::euler_split) {
        if (!cfg.lambda) return "euler_split requires --lambda";
        if (cfg.b || cfg.k) return "euler_split takes --lambda, not --b/--k";
    } else {
        if (cfg.b || cfg.k || cfg.lambda)
            return scenario_name(cfg.scenario) +
                   " takes no --b/--k/--lambda";
        if (!(cfg.lo > 0.0) || !(cfg.hi > cfg.lo))
            return "bracket must satisfy 0 < lo < hi";
    }

    if (cfg.scenario == Scenario::gamma_sweep) {
        if (cfg.eps_list.empty()) return "gamma_sweep requires --eps-list";
        for (std::size_t i = 0; i < cfg.eps_list.size(); ++i) {
            if (!(cfg.eps_list[i] > 0.0))
                return "eps values must be positive";
            if (i > 0 && !(cfg.eps_list[i] < cfg.eps_list[i - 1]))
                return "eps list must be strictly decreasing";
        }
    } else if (!cfg.eps_list.empty()) {
        return "--eps-list only applies to gamma_sweep";
    }
    return {};
}

ojson manifest_for(const ScenarioConfig& cfg) {
    ojson m;
    m["tool"] = "beamvar";
    m["version"] = "0.1.0";
    m["scenario"] = scenario_name(cfg.scenario);
    m["grid_n"] = cfg.grid_n;
    if (cfg.b) m["b"] = *cfg.b;
    if (cfg.k) m["k"] = *cfg.k;
    if (cfg.lambda) m["lambda"] = *cfg.lambda;
    if (cfg.scenario == Scenario::threshold ||
        cfg.scenario == Scenario::constants) {
        m["lo"] = cfg.lo;
        m["hi"] = cfg.hi;
    }
    if (cfg.scenario == Scenario::gamma_sweep) m["eps_list"] = cfg.eps_list;
    m["seed"] = cfg.seed;
    m["threads"] = cfg.threads;  // as requested; 0 means auto
    return m;
}

void add_phi_table(Bundle& bundle, const Grid& g, const PhiField& phi) {
    bundle.add_table("phi", {"x", "phi"}, {g.nodes, phi.values});
}

void add_theta_table(Bundle& bundle, const Grid& g, const ThetaField& th) {
    bundle.add_table("theta", {"x_mid", "theta"}, {g.midpoints, th.values});
}

int run_global_min(const ScenarioConfig& cfg, Bundle& bundle,
                   ojson& summary) {
    const BeamParams p = BeamParams::make(*cfg.b, *cfg.k);
    const Grid g = Grid::uniform(cfg.grid_n);
    SolveOptions opts;
    const MinimizerResult res = minimize_reduced(p, g, opts);
    const ThetaField& th = *res.theta;

    add_phi_table(bundle, g, res.phi);
    add_theta_table(bundle, g, th);
    const PlanarCurve chi = reconstruct_chi(th, g);
    std::vector<double> c1, c2;
    for (const auto& pt : chi.points) {
        c1.push_back(pt[0]);
        c2.push_back(pt[1]);
    }
    bundle.add_table("chi", {"x", "chi1", "chi2"}, {g.nodes, c1, c2});

    summary["energy"] = res.energy;
    summary["iterations"] = res.iterations;
    summary["grad_inf_norm"] = res.grad_inf_norm;
    if (!res.converged) {
        summary["pass"] = false;
        summary["error"] = "minimizer did not converge";
        return exit_solver_failure;
    }

    const double lo = -1e-8;
    const double hi = kPi / 2.0 + 1e-8;
    bool in_band = true;
    for (double v : res.phi.values) in_band = in_band && v >= lo && v <= hi;
    for (double v : th.values) in_band = in_band && v >= lo && v <= hi;
    bool increasing = true;
    double min_inc = HUGE_VAL;
    for (std::size_t i = 1; i < res.phi.values.size(); ++i) {
        const double inc = res.phi.values[i] - res.phi.values[i - 1];
        min_inc = std::min(min_inc, inc);
        increasing = increasing && inc > 0.0;
    }
    summary["phi_end"] = res.phi.values.back();
    summary["min_phi_increment"] = min_inc;

    CheckList cl;
    cl.add("fields_in_first_band", in_band);
    cl.add("phi_strictly_increasing", increasing);
    return cl.finish(summary);
}

int run_local_min(const ScenarioConfig& cfg, Bundle& bundle, ojson& summary) {
    const BeamParams p = BeamParams::make(*cfg.b, *cfg.k);
    const ObstacleSpec spec = ObstacleSpec::make(p.lambda, 0.0);
    const Grid g = Grid::uniform_with_knot(cfg.grid_n, spec.x_switch);
    SolveOptions opts;
    opts.init = InitKind::obstacle_minus_margin;
    const MinimizerResult res = minimize_constrained(p, spec, g, opts);

    add_phi_table(bundle, g, res.phi);
    add_theta_table(bundle, g, *res.theta);
    std::vector<double> barrier;
    for (double x : g.nodes) barrier.push_back(phi_star(x, spec));
    bundle.add_table("obstacle", {"x", "phi_star"}, {g.nodes, barrier});

    summary["energy"] = res.energy;
    summary["iterations"] = res.iterations;
    summary["grad_inf_norm"] = res.grad_inf_norm;
    summary["x_switch"] = spec.x_switch;
    if (!res.converged) {
        summary["pass"] = false;
        summary["error"] = "minimizer did not converge";
        return exit_solver_failure;
    }

    const int j = g.node_index_of(spec.x_switch);
    bool negative = true;
    for (std::size_t i = 1; i < res.phi.values.size(); ++i)
        negative = negative && res.phi.values[i] < 0.0;
    const double phi_switch = res.phi.values[static_cast<std::size_t>(j)];
    const std::vector<int> touches = touch_set(res.phi, spec, g, 1e-6);
    const bool touch_origin_only =
        std::all_of(touches.begin(), touches.end(),
                    [](int i) { return i == 0; });
    const double min_phi =
        *std::min_element(res.phi.values.begin(), res.phi.values.end());
    const double audit =
        perturbation_audit(res, p, g, 0.05, 200, cfg.seed);

    summary["phi_at_switch"] = phi_switch;
    summary["min_phi"] = min_phi;
    summary["touch_nodes"] = touches;
    summary["audit_worst_decrease"] = audit;

    CheckList cl;
    cl.add("phi_negative_after_origin", negative);
    cl.add("phi_below_minus_pi_at_switch", phi_switch < -kPi - 1e-3);
    cl.add("touch_only_at_origin", touch_origin_only);
    cl.add("phi_above_lower_band_edge", min_phi > -1.5 * kPi);
    cl.add("audit_no_decrease", audit >= -1e-8);
    return cl.finish(summary);
}

int run_euler_split(const ScenarioConfig& cfg, Bundle& bundle,
                    ojson& summary) {
    const double lambda = *cfg.lambda;
    const Grid g = Grid::uniform(cfg.grid_n);
    const SplitSolution s = solve_split(lambda, g);

    bundle.add_table("left", {"x", "phi"}, {s.left.x, s.left.phi});
    bundle.add_table("right", {"x", "phi"}, {s.right.x, s.right.phi});

    const double x_switch = s.right.x.front();
    summary["x_switch"] = x_switch;
    summary["left_slope"] = s.left.slope;
    summary["right_slope"] = s.right.slope;
    summary["touches"] = s.left.slope <= s.right.slope;

    bool pinned = s.left.phi.front() == 0.0 && s.left.phi.back() == -kPi &&
                  s.right.phi.front() == -kPi;
    bool right_band = true;
    for (double v : s.right.phi)
        right_band = right_band && v <= -kPi + 1e-12 && v > -1.5 * kPi;

    CheckList cl;
    cl.add("halves_pinned_at_switch", pinned);
    cl.add("right_half_in_band", right_band);
    return cl.finish(summary);
}

int run_threshold(const ScenarioConfig& cfg, Bundle& bundle, ojson& summary) {
    const Grid g = Grid::uniform(cfg.grid_n);
    const double tol = 0.05;
    const double lam_star = find_threshold_lambda(cfg.lo, cfg.hi, tol, g);

    const int fan = 8;
    std::vector<double> lams;
    for (int i = 0; i < fan; ++i)
        lams.push_back(cfg.lo + (cfg.hi - cfg.lo) * i / (fan - 1));
    const std::vector<SweepRow> rows =
        slope_sweep(lams, g, effective_threads(cfg.threads));
    std::vector<double> c_l, c_x, c_ls, c_rs, c_t;
    for (const SweepRow& r : rows) {
        c_l.push_back(r.lambda);
        c_x.push_back(r.x_lambda);
        c_ls.push_back(r.left_slope);
        c_rs.push_back(r.right_slope);
        c_t.push_back(r.touches ? 1.0 : 0.0);
    }
    bundle.add_table("sweep",
                     {"lambda", "x_lambda", "left_slope", "right_slope",
                      "touches"},
                     {c_l, c_x, c_ls, c_rs, c_t});

    summary["lambda_star"] = lam_star;
    summary["bracket"] = {cfg.lo, cfg.hi};

    CheckList cl;
    cl.add("touching_just_below", touch_condition(lam_star - tol, g));
    cl.add("detached_just_above", !touch_condition(lam_star + tol, g));
    if (cfg.lo == 15.0 && cfg.hi == 100.0)
        cl.add("in_reference_range", lam_star > 42.0 && lam_star < 43.0);
    return cl.finish(summary);
}

int run_constants(const ScenarioConfig& cfg, Bundle& bundle, ojson& summary) {
    const double e_const = solve_E();
    const double g_at_e = G_of_mu(e_const);
    const double g_4pi = G_of_mu(4.0 * kPi);
    const double closed_form =
        std::sqrt(2.0) * std::log(1.0 + std::sqrt(2.0)) / std::sqrt(kPi);
    const double nu = rescaled_right_cauchy();
    const double two_sqrt_pi = 2.0 * std::sqrt(kPi);
    const Grid g = Grid::uniform(cfg.grid_n);
    const double lam_star = find_threshold_lambda(cfg.lo, cfg.hi, 0.05, g);

    ojson constants;
    constants["E"] = e_const;
    constants["sqrtE"] = std::sqrt(e_const);
    constants["two_sqrt_pi"] = two_sqrt_pi;
    constants["nu"] = nu;
    constants["lambda_star"] = lam_star;
    bundle.add_document("constants", dump(constants));

    summary["E"] = e_const;
    summary["G_at_E"] = g_at_e;
    summary["G_4pi"] = g_4pi;
    summary["G_4pi_closed_form"] = closed_form;
    summary["nu"] = nu;
    summary["lambda_star"] = lam_star;

    CheckList cl;
    cl.add("G_root_residual_small", std::abs(g_at_e - 1.0) <= 1e-8);
    cl.add("E_below_4pi", e_const < 4.0 * kPi);
    cl.add("G_4pi_matches_closed_form", std::abs(g_4pi - closed_form) <= 1e-8);
    cl.add("G_4pi_below_half_sqrt_pi", g_4pi < std::sqrt(kPi) / 2.0);
    cl.add("nu_matches_two_sqrt_pi", std::abs(nu - two_sqrt_pi) < 1e-3);
    cl.add("threshold_inside_bracket", lam_star > cfg.lo && lam_star < cfg.hi);
    return cl.finish(summary);
}

int run_gamma_sweep(const ScenarioConfig& cfg, Bundle& bundle,
                    ojson& summary) {
    const BeamParams p = BeamParams::make(*cfg.b, *cfg.k);
    const Grid g = Grid::uniform(cfg.grid_n);
    const std::vector<GammaSweepRow> rows =
        gamma_sweep(p, cfg.eps_list, g, effective_threads(cfg.threads));

    std::vector<double> c_e, c_x, c_d, c_t;
    for (const GammaSweepRow& r : rows) {
        c_e.push_back(r.eps);
        c_x.push_back(r.x_switch_eps);
        c_d.push_back(r.sup_distance_to_eps0_minimizer);
        c_t.push_back(r.touched_at_switch ? 1.0 : 0.0);
    }
    bundle.add_table("gamma",
                     {"eps", "x_switch_eps", "sup_distance", "touched"},
                     {c_e, c_x, c_d, c_t});
    summary["sup_distances"] = c_d;
    summary["x_switch"] = c_x;

    const double x0 = x_lambda(p.lambda, 0.0);
    bool dist_decreasing = true;
    bool switch_decreasing = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) {
            dist_decreasing =
                dist_decreasing && c_d[i] < c_d[i - 1];
            switch_decreasing = switch_decreasing && c_x[i] < c_x[i - 1];
        }
        switch_decreasing = switch_decreasing && c_x[i] > x0;
    }

    // Comparison floor: the piecewise-linear interpolants of two equal
    // smooth fields on grids whose knot nodes differ can deviate by the
    // one-cell sag h^2 max|phi''| / 8; distances below that are mesh
    // artifacts, not minimizer separation.
    const ObstacleSpec s0 = ObstacleSpec::make(p.lambda, 0.0);
    const Grid g0 = Grid::uniform_with_knot(cfg.grid_n, s0.x_switch);
    SolveOptions opts;
    opts.init = InitKind::obstacle_minus_margin;
    const MinimizerResult base = minimize_constrained(p, s0, g0, opts);
    const int j0 = g0.node_index_of(s0.x_switch);
    const double h = 1.0 / cfg.grid_n;
    double curv = 0.0;
    for (int i = 1; i < cfg.grid_n; ++i) {
        if (std::abs(i - j0) <= 2) continue;  // knot cells are nonuniform
        const auto q = static_cast<std::size_t>(i);
        curv = std::max(curv,
                        std::abs(base.phi.values[q - 1] -
                                 2.0 * base.phi.values[q] +
                                 base.phi.values[q + 1]) /
                            (h * h));
    }
    const double sag_floor = h * h * curv / 8.0;
    summary["comparison_floor"] = sag_floor;

    CheckList cl;
    cl.add("sup_distances_strictly_decreasing", dist_decreasing);
    // Either the last distance sits at the mesh floor, or the sweep has
    // contracted by at least the square root of the perfect linear rate
    // for its length (factor-2 shift lists contract ~2x per row).
    const double contraction =
        std::pow(2.0, 0.5 * static_cast<double>(c_d.size() - 1));
    cl.add("distances_vanish_within_tolerance",
           c_d.back() <= std::max(2.0 * sag_floor,
                                  c_d.front() / contraction));
    cl.add("switch_points_decrease_toward_limit", switch_decreasing);
    return cl.finish(summary);
}

int run_theta_jump(const ScenarioConfig& cfg, Bundle& bundle,
                   ojson& summary) {
    const BeamParams p = BeamParams::make(*cfg.b, *cfg.k);
    const ObstacleSpec spec = ObstacleSpec::make(p.lambda, 0.0);
    const Grid g = Grid::uniform_with_knot(cfg.grid_n, spec.x_switch);
    SolveOptions opts;
    opts.init = InitKind::obstacle_minus_margin;
    const MinimizerResult res = minimize_constrained(p, spec, g, opts);
    const ThetaField& th = *res.theta;

    add_phi_table(bundle, g, res.phi);
    add_theta_table(bundle, g, th);

    summary["energy"] = res.energy;
    summary["iterations"] = res.iterations;
    summary["grad_inf_norm"] = res.grad_inf_norm;
    if (!res.converged) {
        summary["pass"] = false;
        summary["error"] = "minimizer did not converge";
        return exit_solver_failure;
    }

    const std::vector<ThetaJump> jumps = detect_theta_jump(th, g, 0.1);
    std::vector<double> jx, jm;
    for (const ThetaJump& j : jumps) {
        jx.push_back(j.x);
        jm.push_back(j.magnitude);
    }
    bundle.add_table("jumps", {"x", "magnitude"}, {jx, jm});

    // Nodal crossings of phi through -pi/2.
    std::vector<double> crossings;
    for (std::size_t i = 0; i + 1 < res.phi.values.size(); ++i) {
        const double a = res.phi.values[i] + kPi / 2.0;
        const double b2 = res.phi.values[i + 1] + kPi / 2.0;
        if (a == 0.0) crossings.push_back(g.nodes[i]);
        if (a * b2 < 0.0)
            crossings.push_back(g.nodes[i] +
                                a / (a - b2) * (g.nodes[i + 1] - g.nodes[i]));
    }
    if (!res.phi.values.empty() && res.phi.values.back() == -kPi / 2.0)
        crossings.push_back(g.nodes.back());

    bool located = false;
    for (const ThetaJump& j : jumps) {
        if (!(p.b * (1.0 - j.x) > 1.0)) continue;
        for (double xc : crossings)
            located = located ||
                      std::abs(j.x - xc) <= 2.0 * g.h_max + 1e-12;
    }

    summary["jump_locations"] = jx;
    summary["jump_magnitudes"] = jm;
    summary["phi_crossings"] = crossings;

    CheckList cl;
    cl.add("jump_detected", !jumps.empty());
    cl.add("jump_at_band_crossing_in_supercritical_region", located);
    return cl.finish(summary);
}

}  // namespace

void Bundle::add_table(const std::string& name,
                       std::vector<std::string> names,
                       std::vector<std::vector<double>> columns) {
    if (names.size() != columns.size())
        throw std::invalid_argument("table needs one name per column");
    for (const auto& c : columns)
        if (c.size() != columns.front().size())
            throw std::invalid_argument("table columns must share one length");
    tables_.push_back({name, std::move(names), std::move(columns)});
}

void Bundle::add_document(const std::string& name, std::string json_text) {
    documents_.emplace_back(name, std::move(json_text));
}

void Bundle::write(const std::string& dir,
                   const std::string& manifest_json) const {
    namespace fs = std::filesystem;
    fs::create_directories(fs::path(dir));
    for (const Table& t : tables_) {
        write_csv((fs::path(dir) / (t.name + ".csv")).string(), t.names,
                  t.columns);
        write_dat((fs::path(dir) / (t.name + ".dat")).string(), t.columns);
    }
    for (const auto& [name, text] : documents_)
        write_text((fs::path(dir) / (name + ".json")).string(), text);
    write_text((fs::path(dir) / "manifest.json").string(), manifest_json);
}

std::vector<GammaSweepRow> gamma_sweep(const BeamParams& p,
                                       const std::vector<double>& eps_list,
                                       const Grid& g, int threads) {
    if (eps_list.empty())
        throw std::invalid_argument("eps list must not be empty");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0))
            throw std::invalid_argument("eps values must be positive");
        if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
            throw std::invalid_argument("eps list must be strictly decreasing");
    }

    // Minimizer differences between nearby shifts are dominated by the knot
    // relocation and sit near 1e-8; keep solver noise well below that.
    SolveOptions opts;
    opts.init = InitKind::obstacle_minus_margin;
    opts.grad_tol = 1e-11;

    const int n = g.cells();
    const ObstacleSpec s0 = ObstacleSpec::make(p.lambda, 0.0);
    const Grid g0 = Grid::uniform_with_knot(n, s0.x_switch);
    const MinimizerResult base = minimize_constrained(p, s0, g0, opts);
    if (!base.converged)
        throw std::runtime_error("reference constrained solve did not converge");

    std::vector<GammaSweepRow> rows(eps_list.size());
    detail::parallel_strided(eps_list.size(), threads, [&](std::size_t i) {
        const double eps = eps_list[i];
        const ObstacleSpec se = ObstacleSpec::make(p.lambda, eps);
        const Grid ge = Grid::uniform_with_knot(n, se.x_switch);
        const MinimizerResult r = minimize_constrained(p, se, ge, opts);
        if (!r.converged)
            throw std::runtime_error(
                "constrained solve did not converge at eps=" +
                format_full(eps));

        double d = 0.0;
        for (std::size_t q = 0; q < g0.nodes.size(); ++q)
            d = std::max(d, std::abs(interp_nodes(ge.nodes, r.phi.values,
                                                  g0.nodes[q]) -
                                     base.phi.values[q]));
        for (std::size_t q = 0; q < ge.nodes.size(); ++q)
            d = std::max(d, std::abs(r.phi.values[q] -
                                     interp_nodes(g0.nodes, base.phi.values,
                                                  ge.nodes[q])));

        const int je = ge.node_index_of(se.x_switch);
        const bool touched =
            phi_star(se.x_switch, se) -
                r.phi.values[static_cast<std::size_t>(je)] <=
            1e-6;
        rows[i] = {eps, se.x_switch, d, touched};
    });
    return rows;
}

int effective_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BEAMVAR_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::global_min: return "global_min";
        case Scenario::local_min: return "local_min";
        case Scenario::euler_split: return "euler_split";
        case Scenario::threshold: return "threshold";
        case Scenario::constants: return "constants";
        case Scenario::gamma_sweep: return "gamma_sweep";
        case Scenario::theta_jump: return "theta_jump";
    }
    return "unknown";
}

std::optional<Scenario> scenario_from_name(const std::string& name) {
    for (Scenario s :
         {Scenario::global_min, Scenario::local_min, Scenario::euler_split,
          Scenario::threshold, Scenario::constants, Scenario::gamma_sweep,
          Scenario::theta_jump}) {
        if (scenario_name(s) == name) return s;
    }
    return std::nullopt;
}

int run_scenario(const ScenarioConfig& cfg) {
    const std::string verr = validate(cfg);
    if (!verr.empty()) {
        std::cerr << "config error: " << verr << "\n";
        return exit_config_error;
    }

    Bundle bundle;
    ojson summary;
    summary["scenario"] = scenario_name(cfg.scenario);
    int code = exit_ok;
    try {
        switch (cfg.scenario) {
            case Scenario::global_min:
                code = run_global_min(cfg, bundle, summary);
                break;
            case Scenario::local_min:
                code = run_local_min(cfg, bundle, summary);
                break;
            case Scenario::euler_split:
                code = run_euler_split(cfg, bundle, summary);
                break;
            case Scenario::threshold:
                code = run_threshold(cfg, bundle, summary);
                break;
            case Scenario::constants:
                code = run_constants(cfg, bundle, summary);
                break;
            case Scenario::gamma_sweep:
                code = run_gamma_sweep(cfg, bundle, summary);
                break;
            case Scenario::theta_jump:
                code = run_theta_jump(cfg, bundle, summary);
                break;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        summary["pass"] = false;
        summary["error"] = e.what();
        code = exit_config_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        summary["pass"] = false;
        summary["error"] = e.what();
        code = exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        summary["pass"] = false;
        summary["error"] = e.what();
        code = exit_solver_failure;
    }

    bundle.add_document("summary", dump(summary));
    try {
        bundle.write(cfg.output_dir, dump(manifest_for(cfg)));
    } catch (const std::exception& e) {
        std::cerr << "io failure: " << e.what() << "\n";
        return exit_solver_failure;
    }
    return code;
}

}  // namespace beamvar
