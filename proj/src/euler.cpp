#include "beamvar/euler.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "beamvar/numerics.hpp"
#include "beamvar/obstacle.hpp"
#include "core_minimize.hpp"
#include "parallel.hpp"

namespace beamvar {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Cell potential of the sine load: w(p) = -a sin p with a = lambda (1 - x)
// evaluated at the cell midpoint; the quadratic term has unit stiffness
// because the energy is already divided through by k.
class SineLoadPotential final : public detail::CellPotential {
  public:
    SineLoadPotential(double lambda, std::vector<double> mids)
        : lambda_(lambda), mids_(std::move(mids)) {}

    detail::CellTerm eval(int cell, double pb) const override {
        const double a = lambda_ * (1.0 - mids_[static_cast<std::size_t>(cell)]);
        const double s = std::sin(pb);
        const double c = std::cos(pb);
        return {-a * s, -a * c, a * s};
    }

    double stiffness() const override { return 1.0; }

  private:
    double lambda_;
    std::vector<double> mids_;
};

struct SplitGeometry {
    ObstacleSpec spec;
    Grid grid;   // knotted copy of the requested resolution
    int knot;    // node index of the switch point
};

SplitGeometry split_geometry(double lambda, const Grid& g) {
    ObstacleSpec spec = ObstacleSpec::make(lambda, 0.0);
    Grid kg = Grid::uniform_with_knot(g.cells(), spec.x_switch);
    const int j = kg.node_index_of(spec.x_switch);
    if (j < 2 || kg.cells() - j < 2)
        throw std::runtime_error(
            "grid too coarse to resolve both sides of the switch point");
    return {std::move(spec), std::move(kg), j};
}

detail::CoreResult run_half(const detail::CoreProblem& pr,
                            std::vector<double> init, const char* side) {
    SolveOptions opts;
    detail::CoreResult core = detail::minimize_core(pr, std::move(init), opts);
    if (!core.converged)
        throw std::runtime_error(std::string(side) +
                                 " half solve did not converge");
    return core;
}

double one_sided_slope(const std::vector<double>& xs,
                       const std::vector<double>& phi, std::size_t i0,
                       std::size_t i1, std::size_t i2, double at) {
    return lagrange3_derivative(xs[i0], phi[i0], xs[i1], phi[i1], xs[i2],
                                phi[i2], at);
}

}  // namespace

HalfSolution solve_left(double lambda, const Grid& g) {
    SplitGeometry geo = split_geometry(lambda, g);
    const std::size_t j = static_cast<std::size_t>(geo.knot);

    detail::CoreProblem pr;
    pr.xs.assign(geo.grid.nodes.begin(), geo.grid.nodes.begin() + geo.knot + 1);
    SineLoadPotential pot(
        lambda, std::vector<double>(geo.grid.midpoints.begin(),
                                    geo.grid.midpoints.begin() + geo.knot));
    pr.pot = &pot;
    pr.ub.resize(j + 1);
    for (std::size_t i = 0; i <= j; ++i)
        pr.ub[i] = phi_star(pr.xs[i], geo.spec);
    pr.pins = {{0, 0.0}, {geo.knot, -kPi}};

    // The chord from 0 to -pi is feasible: the barrier branch is concave on
    // [0, x_switch], so it lies above any chord between its own values.
    std::vector<double> init(j + 1);
    for (std::size_t i = 0; i <= j; ++i)
        init[i] = -kPi * pr.xs[i] / geo.spec.x_switch;

    detail::CoreResult core = run_half(pr, std::move(init), "left");
    HalfSolution out;
    out.x = std::move(pr.xs);
    out.phi = std::move(core.phi);
    out.iterations = core.iterations;
    out.slope = one_sided_slope(out.x, out.phi, j - 2, j - 1, j,
                                geo.spec.x_switch);
    return out;
}

HalfSolution solve_right(double lambda, const Grid& g) {
    SplitGeometry geo = split_geometry(lambda, g);
    const std::size_t m =
        static_cast<std::size_t>(geo.grid.cells() - geo.knot);

    detail::CoreProblem pr;
    pr.xs.assign(geo.grid.nodes.begin() + geo.knot, geo.grid.nodes.end());
    SineLoadPotential pot(
        lambda, std::vector<double>(geo.grid.midpoints.begin() + geo.knot,
                                    geo.grid.midpoints.end()));
    pr.pot = &pot;
    pr.ub.assign(m + 1, -kPi);
    pr.pins = {{0, -kPi}};

    // Start on the bound everywhere; nodes whose gradient pushes below -pi
    // are released by the solver on the first iteration.
    std::vector<double> init(m + 1, -kPi);

    detail::CoreResult core = run_half(pr, std::move(init), "right");
    HalfSolution out;
    out.x = std::move(pr.xs);
    out.phi = std::move(core.phi);
    out.iterations = core.iterations;
    out.slope = one_sided_slope(out.x, out.phi, 0, 1, 2, geo.spec.x_switch);
    return out;
}

SplitSolution solve_split(double lambda, const Grid& g) {
    return {solve_left(lambda, g), solve_right(lambda, g)};
}

bool touch_condition(double lambda, const Grid& g) {
    SplitSolution s = solve_split(lambda, g);
    return s.left.slope <= s.right.slope;
}

double find_threshold_lambda(double lo, double hi, double tol, const Grid& g) {
    if (!(lo > 0.0) || !(hi > lo))
        throw std::invalid_argument("threshold bracket must satisfy 0 < lo < hi");
    if (!(tol > 0.0)) throw std::invalid_argument("threshold tol must be positive");
    if (!touch_condition(lo, g) || touch_condition(hi, g))
        throw std::invalid_argument(
            "threshold bracket invalid: need touching at lo and detached at hi");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (touch_condition(mid, g))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double G_of_mu(double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("G requires mu > 0");
    const auto integrand = [mu](double s) {
        return 1.0 / std::sqrt(mu + 4.0 * kPi * std::sin(s));
    };
    return quad_adaptive(integrand, 0.0, kPi, 1e-11);
}

double solve_E() {
    const auto f = [](double e) { return G_of_mu(e) - 1.0; };
    const RootBracket br = RootBracket::of(f, 1e-6, 4.0 * kPi);
    return root_bisect(f, br, 1e-10);
}

double rescaled_right_cauchy(double horizon) {
    if (!(horizon > 1.0))
        throw std::invalid_argument("cauchy horizon must exceed 1");
    const Rhs2 rhs = [](double, double w, double) {
        return -2.0 * kPi * std::cos(w);
    };
    const double step = 0.005;
    const int n_steps =
        static_cast<int>(std::ceil((horizon - 1.0) / step));

    // true  -> the trajectory dives past -3 pi / 2 (speed too large),
    // false -> it turns back upward before reaching it (speed too small).
    const auto overshoots = [&](double nu) {
        const auto traj =
            rk4_integrate(rhs, OdeState{1.0, -kPi, -nu}, horizon, n_steps);
        for (const OdeState& s : traj) {
            if (s.y < -1.5 * kPi) return true;
            if (s.yp > 0.0) return false;
        }
        return !(traj.back().y > -1.5 * kPi);
    };

    double lo = 2.0;
    double hi = 5.0;
    if (overshoots(lo) || !overshoots(hi))
        throw std::runtime_error("cauchy speed bracket failed to classify");
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (overshoots(mid))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<SweepRow> slope_sweep(const std::vector<double>& lambdas,
                                  const Grid& g, int threads) {
    std::vector<SweepRow> rows(lambdas.size());
    detail::parallel_strided(lambdas.size(), threads, [&](std::size_t i) {
        const SplitSolution s = solve_split(lambdas[i], g);
        rows[i] = {lambdas[i], s.right.x.front(), s.left.slope, s.right.slope,
                   s.left.slope <= s.right.slope};
    });
    return rows;
}

}  // namespace beamvar
