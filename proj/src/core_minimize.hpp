#pragma once

// Internal descent core shared by the reduced Timoshenko and Euler drivers.
// Minimizes sum_cells h*(stiffness/2 * slope^2 + W(cell, phi_mid)) over
// nodal fields with optional upper bounds and pinned nodes.

#include <vector>

#include "beamvar/solver.hpp"

namespace beamvar::detail {

// Cell potential value and its first two derivatives in the midpoint value.
// d2w may be negative on concave stretches; the Newton factorization shifts
// indefiniteness away.
struct CellTerm {
    double w;
    double dw;
    double d2w;
};

class CellPotential {
  public:
    virtual ~CellPotential() = default;
    virtual CellTerm eval(int cell, double pb) const = 0;
    virtual double stiffness() const = 0;
};

struct Pin {
    int node;
    double value;
};

struct CoreProblem {
    std::vector<double> xs;  // strictly increasing abscissae
    const CellPotential* pot = nullptr;
    std::vector<double> ub;  // per-node upper bound, +inf where free
    std::vector<Pin> pins;
};

struct CoreResult {
    std::vector<double> phi;
    double energy = 0.0;
    double kkt_residual = 0.0;  // free |g|, bound max(g, 0)
    std::vector<int> active_nodes;
    int iterations = 0;
    bool converged = false;
};

// Projected descent: damped modified-Newton with Armijo halving, or
// fixed-step projected gradient when opts.step_rule == fixed. Deterministic.
CoreResult minimize_core(const CoreProblem& pr, std::vector<double> init,
                         const SolveOptions& opts);

// Objective value alone, without projection or pin enforcement.
double core_energy(const CoreProblem& pr, const std::vector<double>& phi);

}  // namespace beamvar::detail
