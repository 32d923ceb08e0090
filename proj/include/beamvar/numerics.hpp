#pragma once

#include <functional>
#include <vector>

namespace beamvar {

// Sign-change bracket: lo < hi and f_lo * f_hi <= 0.
struct RootBracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;

    // Evaluates f at both ends; throws std::invalid_argument if no sign
    // change.
    static RootBracket of(const std::function<double(double)>& f, double lo,
                          double hi);
};

// Adaptive Simpson with Richardson acceptance, |error| <= tol. Throws
// std::runtime_error when the recursion depth budget is exhausted.
double quad_adaptive(const std::function<double(double)>& f, double a,
                     double b, double tol);

// Deterministic midpoint bisection to bracket width <= tol.
double root_bisect(const std::function<double(double)>& f, RootBracket br,
                   double tol);

// Point on a second-order ODE trajectory.
struct OdeState {
    double t;
    double y;
    double yp;
};

// Right-hand side y'' = rhs(t, y, y').
using Rhs2 = std::function<double(double t, double y, double yp)>;

// Classical RK4 with fixed step on the first-order system equivalent to
// y'' = rhs. Returns the full trajectory including the initial state. Throws
// std::runtime_error on non-finite state.
std::vector<OdeState> rk4_integrate(const Rhs2& rhs, OdeState init,
                                    double t_end, int n_steps);

// Bisection on the initial slope so that y(t1) hits y1_target within tol.
// Returns the matched initial state at t0.
OdeState shoot_dirichlet(const Rhs2& rhs, double t0, double y0, double t1,
                         double y1_target, RootBracket slope_bracket,
                         double tol, int n_steps = 4000);

// Derivative at `at` of the quadric through (x0,y0), (x1,y1), (x2,y2);
// second-order one-sided difference when `at` is one of the abscissae.
double lagrange3_derivative(double x0, double y0, double x1, double y1,
                            double x2, double y2, double at);

}  // namespace beamvar
