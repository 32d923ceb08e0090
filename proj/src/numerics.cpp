#include "beamvar/numerics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace beamvar {

RootBracket RootBracket::of(const std::function<double(double)>& f, double lo,
                            double hi) {
    if (!(lo < hi)) throw std::invalid_argument("bracket needs lo < hi");
    RootBracket br{lo, hi, f(lo), f(hi)};
    if (br.f_lo * br.f_hi > 0.0) {
        std::ostringstream msg;
        msg << "no sign change on [" << lo << "," << hi << "]: f(lo)="
            << br.f_lo << " f(hi)=" << br.f_hi;
        throw std::invalid_argument(msg.str());
    }
    return br;
}

namespace {

constexpr int kMaxDepth = 60;

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double quad_step(const std::function<double(double)>& f, double a, double b,
                 double fa, double fm, double fb, double whole, double tol,
                 int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = (left + right - whole) / 15.0;
    if (std::abs(err) <= tol)
        return left + right + err;
    if (depth >= kMaxDepth)
        throw std::runtime_error("quad_adaptive: depth budget exhausted");
    return quad_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
         + quad_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double quad_adaptive(const std::function<double(double)>& f, double a,
                     double b, double tol) {
    if (!(a < b)) throw std::invalid_argument("quad_adaptive needs a < b");
    if (!(tol > 0.0)) throw std::invalid_argument("quad_adaptive needs tol > 0");
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(fa, fm, fb, b - a);
    return quad_step(f, a, b, fa, fm, fb, whole, tol, 0);
}

double root_bisect(const std::function<double(double)>& f, RootBracket br,
                   double tol) {
    if (!(br.lo < br.hi) || br.f_lo * br.f_hi > 0.0)
        throw std::invalid_argument("root_bisect: invalid bracket");
    if (br.f_lo == 0.0) return br.lo;
    if (br.f_hi == 0.0) return br.hi;
    while (br.hi - br.lo > tol) {
        const double mid = 0.5 * (br.lo + br.hi);
        if (mid <= br.lo || mid >= br.hi) break;  // double resolution floor
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (br.f_lo * fm < 0.0) {
            br.hi = mid;
            br.f_hi = fm;
        } else {
            br.lo = mid;
            br.f_lo = fm;
        }
    }
    return 0.5 * (br.lo + br.hi);
}

std::vector<OdeState> rk4_integrate(const Rhs2& rhs, OdeState init,
                                    double t_end, int n_steps) {
    if (n_steps < 1) throw std::invalid_argument("rk4 needs n_steps >= 1");
    std::vector<OdeState> traj;
    traj.reserve(n_steps + 1);
    traj.push_back(init);
    const double h = (t_end - init.t) / n_steps;
    double t = init.t;
    double y = init.y;
    double v = init.yp;
    for (int i = 0; i < n_steps; ++i) {
        const double k1y = v;
        const double k1v = rhs(t, y, v);
        const double k2y = v + 0.5 * h * k1v;
        const double k2v = rhs(t + 0.5 * h, y + 0.5 * h * k1y, v + 0.5 * h * k1v);
        const double k3y = v + 0.5 * h * k2v;
        const double k3v = rhs(t + 0.5 * h, y + 0.5 * h * k2y, v + 0.5 * h * k2v);
        const double k4y = v + h * k3v;
        const double k4v = rhs(t + h, y + h * k3y, v + h * k3v);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        t = init.t + (i + 1) * h;
        if (!std::isfinite(y) || !std::isfinite(v))
            throw std::runtime_error("rk4_integrate: non-finite state");
        traj.push_back({t, y, v});
    }
    return traj;
}

OdeState shoot_dirichlet(const Rhs2& rhs, double t0, double y0, double t1,
                         double y1_target, RootBracket slope_bracket,
                         double tol, int n_steps) {
    const auto endpoint_miss = [&](double s) {
        const auto traj = rk4_integrate(rhs, {t0, y0, s}, t1, n_steps);
        return traj.back().y - y1_target;
    };
    if (slope_bracket.f_lo * slope_bracket.f_hi > 0.0)
        throw std::invalid_argument("shoot_dirichlet: invalid slope bracket");
    double lo = slope_bracket.lo, hi = slope_bracket.hi;
    double flo = slope_bracket.f_lo;
    double s = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        s = 0.5 * (lo + hi);
        const double fs = endpoint_miss(s);
        if (std::abs(fs) <= tol) break;
        if (flo * fs <= 0.0) {
            hi = s;
        } else {
            lo = s;
            flo = fs;
        }
        if (hi - lo < 1e-15 * (1.0 + std::abs(lo))) break;
    }
    return {t0, y0, s};
}

double lagrange3_derivative(double x0, double y0, double x1, double y1,
                            double x2, double y2, double at) {
    return y0 * (2.0 * at - x1 - x2) / ((x0 - x1) * (x0 - x2))
         + y1 * (2.0 * at - x0 - x2) / ((x1 - x0) * (x1 - x2))
         + y2 * (2.0 * at - x0 - x1) / ((x2 - x0) * (x2 - x1));
}

}  // namespace beamvar
