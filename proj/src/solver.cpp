#include "beamvar/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "beamvar/numerics.hpp"
#include "beamvar/theta.hpp"
#include "core_minimize.hpp"

namespace beamvar {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kArmijo = 1e-4;

// Reduced Timoshenko cell: theta eliminated by its pointwise minimization.
// The envelope theorem gives dW/dpb = pb - theta*, and differentiating the
// stationarity equation gives d2W = c sin(theta*) / (1 + c sin(theta*)).
class TimoshenkoPotential : public detail::CellPotential {
  public:
    TimoshenkoPotential(const BeamParams& p, std::vector<double> mids)
        : b_(p.b), k_(p.k), mids_(std::move(mids)) {}

    detail::CellTerm eval(int cell, double pb) const override {
        const double x = mids_[cell];
        const double c = b_ * (1.0 - x);
        const double th = pointwise_theta_argmin({pb, x, b_});
        const double d = pb - th;
        const double s = std::sin(th);
        const double denom = 1.0 + c * s;
        // denom -> 0+ only at a degenerate pointwise minimum; a huge negative
        // curvature just makes the Newton factorization shift there.
        const double d2 = denom > 1e-9 ? c * s / denom : -1e12;
        return {0.5 * d * d - c * s, d, d2};
    }
    double stiffness() const override { return k_; }

  private:
    double b_, k_;
    std::vector<double> mids_;
};

struct EvalOut {
    double energy = 0.0;
    std::vector<double> grad;
    std::vector<double> cell_d2;
};

void evaluate(const detail::CoreProblem& pr,
              const std::vector<uint8_t>& pin_mask,
              const std::vector<double>& phi, EvalOut& out) {
    const int nn = static_cast<int>(phi.size());
    out.energy = 0.0;
    out.grad.assign(nn, 0.0);
    out.cell_d2.assign(nn - 1, 0.0);
    const double k = pr.pot->stiffness();
    for (int i = 0; i + 1 < nn; ++i) {
        const double h = pr.xs[i + 1] - pr.xs[i];
        const double slope = (phi[i + 1] - phi[i]) / h;
        const double pb = 0.5 * (phi[i] + phi[i + 1]);
        const detail::CellTerm t = pr.pot->eval(i, pb);
        out.energy += h * (0.5 * k * slope * slope + t.w);
        const double coup = 0.5 * h * t.dw;
        out.grad[i] += coup - k * slope;
        out.grad[i + 1] += coup + k * slope;
        out.cell_d2[i] = t.d2w;
    }
    for (int i = 0; i < nn; ++i)
        if (pin_mask[i]) out.grad[i] = 0.0;
}

double kkt_residual(const detail::CoreProblem& pr,
                    const std::vector<uint8_t>& pin_mask,
                    const std::vector<double>& phi,
                    const std::vector<double>& grad) {
    double r = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (pin_mask[i]) continue;
        if (phi[i] >= pr.ub[i])
            r = std::max(r, std::max(grad[i], 0.0));
        else
            r = std::max(r, std::abs(grad[i]));
    }
    return r;
}

void project(const detail::CoreProblem& pr,
             const std::vector<uint8_t>& pin_mask, std::vector<double>& phi) {
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (!pin_mask[i]) phi[i] = std::min(phi[i], pr.ub[i]);
}

// LDL^T factor-and-solve for the tridiagonal (d + shift, e); fails on any
// pivot at or below the floor.
bool ldl_solve(const std::vector<double>& d, const std::vector<double>& e,
               const std::vector<double>& rhs, double shift, double floor_,
               std::vector<double>& sol) {
    const int m = static_cast<int>(d.size());
    std::vector<double> dd(m);
    for (int i = 0; i < m; ++i) {
        double di = d[i] + shift;
        if (i) di -= e[i - 1] * e[i - 1] / dd[i - 1];
        if (!(di > floor_)) return false;
        dd[i] = di;
    }
    sol = rhs;
    for (int i = 1; i < m; ++i) sol[i] -= e[i - 1] / dd[i - 1] * sol[i - 1];
    for (int i = 0; i < m; ++i) sol[i] /= dd[i];
    for (int i = m - 2; i >= 0; --i) sol[i] -= e[i] / dd[i] * sol[i + 1];
    return true;
}

}  // namespace

namespace detail {

double core_energy(const CoreProblem& pr, const std::vector<double>& phi) {
    if (phi.size() != pr.xs.size())
        throw std::invalid_argument("field / abscissa size mismatch");
    double e = 0.0;
    const double k = pr.pot->stiffness();
    for (std::size_t i = 0; i + 1 < phi.size(); ++i) {
        const double h = pr.xs[i + 1] - pr.xs[i];
        const double slope = (phi[i + 1] - phi[i]) / h;
        const double pb = 0.5 * (phi[i] + phi[i + 1]);
        e += h * (0.5 * k * slope * slope +
                  pr.pot->eval(static_cast<int>(i), pb).w);
    }
    return e;
}

CoreResult minimize_core(const CoreProblem& pr, std::vector<double> init,
                         const SolveOptions& opts) {
    const int nn = static_cast<int>(pr.xs.size());
    if (static_cast<int>(init.size()) != nn ||
        static_cast<int>(pr.ub.size()) != nn)
        throw std::invalid_argument("field / abscissa size mismatch");
    if (!(opts.grad_tol > 0.0) || opts.max_iters < 1)
        throw std::invalid_argument("grad_tol must be positive, max_iters >= 1");

    std::vector<uint8_t> pin_mask(nn, 0);
    for (const Pin& p : pr.pins) {
        pin_mask[p.node] = 1;
        init[p.node] = p.value;
    }
    project(pr, pin_mask, init);

    std::vector<double> phi = std::move(init);
    EvalOut ev;
    evaluate(pr, pin_mask, phi, ev);

    CoreResult res;
    res.iterations = 0;
    std::vector<double> diag(nn), off(nn > 1 ? nn - 1 : 0);
    std::vector<int> free_nodes;
    std::vector<double> cd, ce, rhs, sol, dir(nn), cand;

    while (true) {
        const double r = kkt_residual(pr, pin_mask, phi, ev.grad);
        if (r <= opts.grad_tol) {
            res.converged = true;
            break;
        }
        if (res.iterations >= opts.max_iters) break;

        // Tridiagonal Hessian of the objective at phi.
        std::fill(diag.begin(), diag.end(), 0.0);
        std::fill(off.begin(), off.end(), 0.0);
        const double k = pr.pot->stiffness();
        for (int i = 0; i + 1 < nn; ++i) {
            const double h = pr.xs[i + 1] - pr.xs[i];
            const double kh = k / h;
            const double q = 0.25 * h * ev.cell_d2[i];
            diag[i] += kh + q;
            diag[i + 1] += kh + q;
            off[i] += q - kh;
        }

        // Nodes blocked at their bound with a nonpositive gradient stay put;
        // everything else is free this iteration.
        free_nodes.clear();
        for (int i = 0; i < nn; ++i) {
            if (pin_mask[i]) continue;
            if (phi[i] >= pr.ub[i] && ev.grad[i] <= 0.0) continue;
            free_nodes.push_back(i);
        }
        std::fill(dir.begin(), dir.end(), 0.0);
        const int m = static_cast<int>(free_nodes.size());
        if (m == 0) break;  // residual above tol but nothing movable

        if (opts.step_rule == StepRule::fixed) {
            double lip = 0.0;
            for (int idx = 0; idx < m; ++idx) {
                const int i = free_nodes[idx];
                double row = std::abs(diag[i]);
                if (i > 0) row += std::abs(off[i - 1]);
                if (i + 1 < nn) row += std::abs(off[i]);
                lip = std::max(lip, row);
            }
            const double step = 1.0 / std::max(lip, 1e-300);
            cand = phi;
            for (int idx = 0; idx < m; ++idx) {
                const int i = free_nodes[idx];
                cand[i] -= step * ev.grad[i];
            }
            project(pr, pin_mask, cand);
            phi.swap(cand);
            evaluate(pr, pin_mask, phi, ev);
            ++res.iterations;
            continue;
        }

        cd.resize(m);
        ce.assign(m > 0 ? m - 1 : 0, 0.0);
        rhs.resize(m);
        double scale = 1e-300;
        for (int idx = 0; idx < m; ++idx) {
            const int i = free_nodes[idx];
            cd[idx] = diag[i];
            rhs[idx] = -ev.grad[i];
            scale = std::max(scale, std::abs(diag[i]));
            if (idx + 1 < m && free_nodes[idx + 1] == i + 1) ce[idx] = off[i];
        }

        // Levenberg shift escalation until the factorization is positive.
        bool solved = ldl_solve(cd, ce, rhs, 0.0, 1e-12 * scale, sol);
        for (double shift = 1e-8 * scale; !solved && shift < 1e9 * scale;
             shift *= 10.0)
            solved = ldl_solve(cd, ce, rhs, shift, 1e-12 * scale, sol);

        double gd = 0.0;
        if (solved) {
            for (int idx = 0; idx < m; ++idx) {
                dir[free_nodes[idx]] = sol[idx];
                gd += ev.grad[free_nodes[idx]] * sol[idx];
            }
        }
        if (!solved || gd >= 0.0) {
            gd = 0.0;
            for (int idx = 0; idx < m; ++idx) {
                const int i = free_nodes[idx];
                dir[i] = -ev.grad[i];
                gd -= ev.grad[i] * ev.grad[i];
            }
        }

        // Armijo halving on the projected step.
        bool accepted = false;
        for (double t = 1.0; t > 0x1p-60; t *= 0.5) {
            cand = phi;
            for (int idx = 0; idx < m; ++idx) {
                const int i = free_nodes[idx];
                cand[i] += t * dir[i];
            }
            project(pr, pin_mask, cand);
            double pred = 0.0;
            for (int i = 0; i < nn; ++i) pred += ev.grad[i] * (cand[i] - phi[i]);
            const double enew = core_energy(pr, cand);
            // Near the minimizer the predicted change drops below the
            // resolution of the energy sum; the sufficient-decrease test is
            // then meaningless, and the unit Newton contraction is safe.
            const bool below_floor =
                t == 1.0 && std::isfinite(enew) &&
                std::abs(pred) <= 1e-14 * (1.0 + std::abs(ev.energy));
            const bool ok = below_floor ||
                            (pred < 0.0 ? enew <= ev.energy + kArmijo * pred
                                        : enew < ev.energy);
            if (ok) {
                phi.swap(cand);
                evaluate(pr, pin_mask, phi, ev);
                accepted = true;
                break;
            }
        }
        if (!accepted) break;  // no further progress representable
        ++res.iterations;
    }

    res.phi = std::move(phi);
    res.energy = ev.energy;
    res.kkt_residual = kkt_residual(pr, pin_mask, res.phi, ev.grad);
    for (int i = 0; i < nn; ++i)
        if (!pin_mask[i] && res.phi[i] >= pr.ub[i]) res.active_nodes.push_back(i);
    return res;
}

}  // namespace detail

namespace {

std::vector<double> initial_field(const SolveOptions& opts, const Grid& g,
                                  const ObstacleSpec* spec) {
    const int nn = g.node_count();
    switch (opts.init) {
        case InitKind::zero:
            return std::vector<double>(nn, 0.0);
        case InitKind::obstacle_minus_margin: {
            if (!spec)
                throw std::invalid_argument(
                    "obstacle initialization requires a constrained solve");
            std::vector<double> v(nn);
            for (int i = 0; i < nn; ++i)
                v[i] = std::min(phi_star(g.nodes[i], *spec) - 0.1, 0.0);
            v[0] = 0.0;
            return v;
        }
        case InitKind::user: {
            if (static_cast<int>(opts.user_init.size()) != nn)
                throw std::invalid_argument("user init / grid size mismatch");
            return opts.user_init;
        }
    }
    throw std::invalid_argument("unknown init kind");
}

ThetaField eliminated_theta(const std::vector<double>& phi,
                            const BeamParams& p, const Grid& g) {
    ThetaField theta = ThetaField::zero(g);
    for (int i = 0; i < g.cells(); ++i) {
        const double pb = 0.5 * (phi[i] + phi[i + 1]);
        theta.values[i] = pointwise_theta_argmin({pb, g.midpoints[i], p.b});
    }
    return theta;
}

MinimizerResult package(detail::CoreResult core, const BeamParams* p,
                        const Grid& g) {
    MinimizerResult res;
    res.phi = PhiField{std::move(core.phi)};
    if (p) res.theta = eliminated_theta(res.phi.values, *p, g);
    res.energy = core.energy;
    res.grad_inf_norm = core.kkt_residual;
    res.active_nodes = std::move(core.active_nodes);
    res.iterations = core.iterations;
    res.converged = core.converged;
    return res;
}

}  // namespace

MinimizerResult minimize_reduced(const BeamParams& p, const Grid& g,
                                 const SolveOptions& opts) {
    TimoshenkoPotential pot(p, g.midpoints);
    detail::CoreProblem pr;
    pr.xs = g.nodes;
    pr.pot = &pot;
    pr.ub.assign(g.node_count(), kInf);
    pr.pins = {{0, 0.0}};
    auto core = detail::minimize_core(pr, initial_field(opts, g, nullptr), opts);
    return package(std::move(core), &p, g);
}

MinimizerResult minimize_constrained(const BeamParams& p,
                                     const ObstacleSpec& spec, const Grid& g,
                                     const SolveOptions& opts) {
    if (g.node_index_of(spec.x_switch) < 0)
        throw std::invalid_argument("grid must contain the switch point node");
    TimoshenkoPotential pot(p, g.midpoints);
    detail::CoreProblem pr;
    pr.xs = g.nodes;
    pr.pot = &pot;
    pr.ub.resize(g.node_count());
    for (int i = 0; i < g.node_count(); ++i)
        pr.ub[i] = phi_star(g.nodes[i], spec);
    pr.pins = {{0, 0.0}};
    auto core = detail::minimize_core(pr, initial_field(opts, g, &spec), opts);
    return package(std::move(core), &p, g);
}

MinimizerResult minimize_euler_constrained(double lambda,
                                           const ObstacleSpec& spec,
                                           const Grid& g,
                                           const SolveOptions& opts) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    if (g.node_index_of(spec.x_switch) < 0)
        throw std::invalid_argument("grid must contain the switch point node");

    class EulerPotential : public detail::CellPotential {
      public:
        EulerPotential(double lambda, const std::vector<double>& mids)
            : lambda_(lambda), mids_(mids) {}
        detail::CellTerm eval(int cell, double pb) const override {
            const double a = lambda_ * (1.0 - mids_[cell]);
            const double s = std::sin(pb);
            return {-a * s, -a * std::cos(pb), a * s};
        }
        double stiffness() const override { return 1.0; }

      private:
        double lambda_;
        const std::vector<double>& mids_;
    } pot(lambda, g.midpoints);

    detail::CoreProblem pr;
    pr.xs = g.nodes;
    pr.pot = &pot;
    pr.ub.resize(g.node_count());
    for (int i = 0; i < g.node_count(); ++i)
        pr.ub[i] = phi_star(g.nodes[i], spec);
    pr.pins = {{0, 0.0}};
    auto core = detail::minimize_core(pr, initial_field(opts, g, &spec), opts);
    return package(std::move(core), nullptr, g);
}

namespace {

// Nonuniform three-point second difference at interior node i.
double second_difference(const std::vector<double>& x,
                         const std::vector<double>& v, int i) {
    const double hm = x[i] - x[i - 1];
    const double hp = x[i + 1] - x[i];
    return 2.0 / (hm + hp) * ((v[i + 1] - v[i]) / hp - (v[i] - v[i - 1]) / hm);
}

double boundary_defect(const Grid& g, const std::vector<double>& phi) {
    const int n = g.node_count();
    return std::abs(lagrange3_derivative(g.nodes[n - 3], phi[n - 3],
                                         g.nodes[n - 2], phi[n - 2],
                                         g.nodes[n - 1], phi[n - 1], 1.0));
}

std::vector<uint8_t> active_mask(const MinimizerResult& res, int nn) {
    std::vector<uint8_t> mask(nn, 0);
    for (int i : res.active_nodes) mask[i] = 1;
    return mask;
}

}  // namespace

double el_residual(const MinimizerResult& res, const BeamParams& p,
                   const Grid& g) {
    if (!res.converged)
        throw std::invalid_argument("residual requires a converged result");
    if (!res.theta)
        throw std::invalid_argument("residual requires an eliminated theta");
    if (static_cast<int>(res.phi.values.size()) != g.node_count() ||
        g.cells() < 3)
        throw std::invalid_argument("result / grid mismatch");
    const auto mask = active_mask(res, g.node_count());
    double worst = 0.0;
    for (int i = 1; i + 1 < g.node_count(); ++i) {
        if (mask[i]) continue;
        const double avg_theta =
            0.5 * (res.theta->values[i - 1] + res.theta->values[i]);
        const double r = p.k * second_difference(g.nodes, res.phi.values, i) -
                         (res.phi.values[i] - avg_theta);
        worst = std::max(worst, std::abs(r));
    }
    return worst + boundary_defect(g, res.phi.values);
}

double euler_el_residual(const MinimizerResult& res, double lambda,
                         const Grid& g) {
    if (!res.converged)
        throw std::invalid_argument("residual requires a converged result");
    if (static_cast<int>(res.phi.values.size()) != g.node_count() ||
        g.cells() < 3)
        throw std::invalid_argument("result / grid mismatch");
    const auto mask = active_mask(res, g.node_count());
    double worst = 0.0;
    for (int i = 1; i + 1 < g.node_count(); ++i) {
        if (mask[i]) continue;
        const double r = second_difference(g.nodes, res.phi.values, i) +
                         lambda * (1.0 - g.nodes[i]) * std::cos(res.phi.values[i]);
        worst = std::max(worst, std::abs(r));
    }
    return worst + boundary_defect(g, res.phi.values);
}

namespace {

double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

// Box-Muller from the raw integer stream: bit-stable across platforms,
// unlike std::normal_distribution.
void next_normal_pair(std::mt19937_64& rng, double& z0, double& z1) {
    const double u1 = 1.0 - next_uniform(rng);
    const double u2 = next_uniform(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    z0 = r * std::cos(2.0 * kPi * u2);
    z1 = r * std::sin(2.0 * kPi * u2);
}

}  // namespace

double perturbation_audit(const MinimizerResult& res, const BeamParams& p,
                          const Grid& g, double radius, int samples,
                          unsigned long long seed) {
    if (!(radius > 0.0) || samples < 1)
        throw std::invalid_argument("radius must be positive, samples >= 1");
    if (static_cast<int>(res.phi.values.size()) != g.node_count())
        throw std::invalid_argument("result / grid mismatch");

    constexpr int kModes = 8;
    const int nn = g.node_count();
    std::vector<std::vector<double>> modes(kModes, std::vector<double>(nn));
    for (int m = 0; m < kModes; ++m)
        for (int i = 0; i < nn; ++i)
            modes[m][i] = std::sin((2 * m + 1) * kPi * g.nodes[i] / 2.0);

    TimoshenkoPotential pot(p, g.midpoints);
    detail::CoreProblem pr;
    pr.xs = g.nodes;
    pr.pot = &pot;
    const double base = detail::core_energy(pr, res.phi.values);

    std::mt19937_64 rng(seed);
    double worst = kInf;
    std::vector<double> delta(nn), cand(nn);
    for (int s = 0; s < samples; ++s) {
        double a[kModes];
        for (int m = 0; m < kModes; m += 2) {
            next_normal_pair(rng, a[m], a[m + 1]);
            a[m] /= (2 * m + 1) * (2 * m + 1);
            a[m + 1] /= (2 * m + 3) * (2 * m + 3);
        }
        const double u = next_uniform(rng);

        std::fill(delta.begin(), delta.end(), 0.0);
        for (int m = 0; m < kModes; ++m)
            for (int i = 0; i < nn; ++i) delta[i] += a[m] * modes[m][i];

        double h1sq = 0.0;
        for (int i = 0; i + 1 < nn; ++i) {
            const double h = g.nodes[i + 1] - g.nodes[i];
            const double slope = (delta[i + 1] - delta[i]) / h;
            const double mid = 0.5 * (delta[i] + delta[i + 1]);
            h1sq += h * (slope * slope + mid * mid);
        }
        if (!(h1sq > 0.0)) continue;
        const double scale = radius * u / std::sqrt(h1sq);

        for (int i = 0; i < nn; ++i)
            cand[i] = res.phi.values[i] + scale * delta[i];
        worst = std::min(worst, detail::core_energy(pr, cand) - base);
    }
    return worst;
}

}  // namespace beamvar
