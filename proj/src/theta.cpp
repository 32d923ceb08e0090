#include "beamvar/theta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace beamvar {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Stationarity residual of the pointwise problem; roots are the stationary
// points of H.
double stat_residual(double theta, double c, double phi) {
    return theta - c * std::cos(theta) - phi;
}

double pointwise_energy(double theta, double c, double phi) {
    return -phi * theta + 0.5 * theta * theta - c * std::sin(theta);
}

// Unique stationary point for c < 1: the residual is strictly increasing
// (derivative 1 + c sin(theta) >= 1 - c > 0). Newton step, bisection
// fallback on the invariant bracket [phi - c, phi + c].
double solve_unique(double phi, double c) {
    if (c == 0.0) return phi;
    double lo = phi - c;
    double hi = phi + c;
    double t = phi;
    for (int it = 0; it < 200; ++it) {
        const double f = stat_residual(t, c, phi);
        if (std::abs(f) < 1e-13) return t;
        (f > 0.0 ? hi : lo) = t;
        double next = t - f / (1.0 + c * std::sin(t));
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        t = next;
    }
    throw std::runtime_error("pointwise stationarity solve did not converge");
}

// Bisects one sign change of the stationarity residual to full precision.
double bisect_root(double a, double fa, double b, double c, double phi) {
    double fb = stat_residual(b, c, phi);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        const double fm = stat_residual(m, c, phi);
        if (fm == 0.0) return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Enumerates all stationary points inside the a-priori bracket and compares
// pointwise energies; near-equal energies break toward the smaller theta.
double argmin_enumerate(double phi, double c, double b) {
    // Any theta with H(theta) <= H(0) satisfies theta^2/2 <= |phi||theta| + c,
    // hence |theta| <= |phi| + sqrt(phi^2 + 2b); the global minimizer and all
    // of its energy ties lie inside this bracket.
    const double r = std::abs(phi) + std::sqrt(2.0 * b + phi * phi);
    const double lo = -r - 1e-6;
    const double hi = r + 1e-6;
    const int n = std::max(2000, static_cast<int>((hi - lo) / 0.004));

    std::vector<double> roots;
    double prev_t = lo;
    double prev_f = stat_residual(lo, c, phi);
    if (prev_f == 0.0) roots.push_back(lo);
    for (int i = 1; i <= n; ++i) {
        const double t = lo + (hi - lo) * i / n;
        const double f = stat_residual(t, c, phi);
        if (f == 0.0) {
            roots.push_back(t);
        } else if (prev_f != 0.0 && (prev_f < 0.0) != (f < 0.0)) {
            roots.push_back(bisect_root(prev_t, prev_f, t, c, phi));
        }
        prev_t = t;
        prev_f = f;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double u, double v) { return v - u < 1e-9; }),
                roots.end());
    if (roots.empty())
        throw std::runtime_error(
            "stationary point enumeration found no candidate in bracket");

    double best = roots.front();
    double best_h = pointwise_energy(best, c, phi);
    for (std::size_t i = 1; i < roots.size(); ++i) {
        const double h = pointwise_energy(roots[i], c, phi);
        if (h < best_h - 1e-12 * (1.0 + std::abs(best_h))) {
            best = roots[i];
            best_h = h;
        }
    }
    return best;
}

}  // namespace

double pointwise_theta_argmin(const PointwiseProblem& prob) {
    if (!(prob.b > 0.0)) throw std::invalid_argument("b must be positive");
    if (!(prob.x >= 0.0 && prob.x <= 1.0))
        throw std::invalid_argument("x outside [0,1]");
    const double c = prob.b * (1.0 - prob.x);
    if (c < 1.0) return solve_unique(prob.phi_val, c);
    return argmin_enumerate(prob.phi_val, c, prob.b);
}

double theta_implicit(double phi_val, double x, double b) {
    if (!(b > 0.0 && b < 1.0))
        throw std::invalid_argument("implicit theta map requires 0 < b < 1");
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("x outside [0,1]");
    return solve_unique(phi_val, b * (1.0 - x));
}

ThetaField theta_map(const PhiField& phi, const BeamParams& p, const Grid& g) {
    if (!(p.b < 1.0))
        throw std::invalid_argument(
            "theta map requires b < 1; use pointwise_theta_argmin otherwise");
    if (static_cast<int>(phi.values.size()) != g.node_count())
        throw std::invalid_argument("phi field / grid size mismatch");
    ThetaField theta = ThetaField::zero(g);
    for (int i = 0; i < g.cells(); ++i) {
        const double pb = 0.5 * (phi.values[i] + phi.values[i + 1]);
        theta.values[i] = solve_unique(pb, p.b * (1.0 - g.midpoints[i]));
    }
    return theta;
}

BandIndex band_classify(double v) {
    return {static_cast<int>(std::ceil(v / kPi - 0.5))};
}

std::vector<ThetaJump> detect_theta_jump(const ThetaField& theta,
                                         const Grid& g, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (static_cast<int>(theta.values.size()) != g.cells())
        throw std::invalid_argument("theta field / grid size mismatch");
    std::vector<ThetaJump> jumps;
    for (int i = 0; i + 1 < g.cells(); ++i) {
        const double m = std::abs(theta.values[i + 1] - theta.values[i]);
        if (m > delta) jumps.push_back({g.nodes[i + 1], m});
    }
    return jumps;
}

}  // namespace beamvar
