#pragma once

#include <optional>
#include <vector>

#include "beamvar/fields.hpp"
#include "beamvar/grid.hpp"
#include "beamvar/obstacle.hpp"

namespace beamvar {

enum class StepRule {
    fixed,         // projected gradient, fixed 1/L step (reproducibility mode)
    backtracking,  // damped Newton direction with Armijo halving, c = 1e-4
};

enum class InitKind {
    zero,
    obstacle_minus_margin,  // phi_star - 0.1, capped at 0 at the origin
    user,
};

struct SolveOptions {
    double grad_tol = 1e-10;
    int max_iters = 500;
    StepRule step_rule = StepRule::backtracking;
    InitKind init = InitKind::zero;
    std::vector<double> user_init;  // nodal values, used when init == user
};

struct MinimizerResult {
    PhiField phi;
    std::optional<ThetaField> theta;  // absent for the Euler functional
    double energy = 0.0;
    double grad_inf_norm = 0.0;       // over free (inactive, unpinned) nodes
    std::vector<int> active_nodes;
    int iterations = 0;
    bool converged = false;
};

// Minimize the reduced objective phi -> F(phi, Theta(phi)) with theta
// eliminated pointwise (theta_map for b < 1, pointwise argmin otherwise).
MinimizerResult minimize_reduced(const BeamParams& p, const Grid& g,
                                 const SolveOptions& opts);

// Same objective restricted to phi <= phi_star. Converges in the KKT sense:
// free nodes have |gradient| <= grad_tol; active nodes carry a nonnegative
// multiplier -gradient, checked as gradient <= grad_tol.
MinimizerResult minimize_constrained(const BeamParams& p,
                                     const ObstacleSpec& spec, const Grid& g,
                                     const SolveOptions& opts);

// Constrained minimizer of the Euler functional; result carries no theta.
MinimizerResult minimize_euler_constrained(double lambda,
                                           const ObstacleSpec& spec,
                                           const Grid& g,
                                           const SolveOptions& opts);

// Inf-norm over interior inactive nodes of k*(second difference of phi) -
// (phi - theta averaged to the node), plus the natural-boundary defect
// |phi'(1)| by one-sided second-order difference.
double el_residual(const MinimizerResult& res, const BeamParams& p,
                   const Grid& g);

// Counterpart for Euler results: residual of phi'' + lambda(1-x)cos(phi) on
// interior inactive nodes plus |phi'(1)|.
double euler_el_residual(const MinimizerResult& res, double lambda,
                         const Grid& g);

// Samples random smooth perturbations vanishing at 0, scaled to H1 norm <=
// radius, and returns the most negative reduced-energy difference
// F(phi + d) - F(phi) over the sample set. Deterministic in seed.
double perturbation_audit(const MinimizerResult& res, const BeamParams& p,
                          const Grid& g, double radius, int samples,
                          unsigned long long seed);

}  // namespace beamvar
