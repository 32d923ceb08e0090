#pragma once

#include <vector>

#include "beamvar/grid.hpp"

namespace beamvar {

// Constrained minimizer of one half of the split problem, on the sub-nodes
// of a knotted grid. slope is the one-sided second-order difference at the
// switch point.
struct HalfSolution {
    std::vector<double> x;
    std::vector<double> phi;
    double slope = 0.0;
    int iterations = 0;
};

// Both halves assembled; the split point is x[0] of the right half.
struct SplitSolution {
    HalfSolution left;   // pinned 0 at x=0 and -pi at x_lambda, phi <= cubic
    HalfSolution right;  // pinned -pi at x_lambda, phi <= -pi, free at x=1
};

// Left functional int_0^{x_lambda} phi'^2/2 - lambda(1-x) sin(phi) over
// fields pinned to 0 and -pi at the ends, below the barrier. The grid
// argument fixes the resolution; the knot at x_lambda is inserted
// internally.
HalfSolution solve_left(double lambda, const Grid& g);

// Right functional on [x_lambda, 1], pinned to -pi on the left, phi <= -pi,
// natural condition at 1.
HalfSolution solve_right(double lambda, const Grid& g);

SplitSolution solve_split(double lambda, const Grid& g);

// G(mu) = int_0^pi dsigma / sqrt(mu + 4 pi sin(sigma)), mu > 0, to 1e-10.
double G_of_mu(double mu);

// Unique root of G(E) = 1 on (1e-6, 4 pi), bisection to 1e-10.
double solve_E();

// True iff left_slope <= right_slope at x_lambda: a minimizer passing
// through (x_lambda, -pi) is possible. False means detachment.
bool touch_condition(double lambda, const Grid& g);

// Bisection on lambda for the sign change of left_slope - right_slope.
// Requires touch_condition(lo) true and touch_condition(hi) false.
double find_threshold_lambda(double lo, double hi, double tol, const Grid& g);

// Limiting initial speed nu of the autonomous problem w'' + 2 pi cos(w) = 0,
// w(1) = -pi, w'(1) = -nu, selected so the orbit tends to -3 pi/2 with
// vanishing speed (overshoot / turn-back dichotomy on [1, horizon]).
double rescaled_right_cauchy(double horizon = 50.0);

struct SweepRow {
    double lambda;
    double x_lambda;
    double left_slope;
    double right_slope;
    bool touches;
};

// Split solves over a list of lambdas; rows in input order. threads <= 1
// runs sequentially.
std::vector<SweepRow> slope_sweep(const std::vector<double>& lambdas,
                                  const Grid& g, int threads);

}  // namespace beamvar
