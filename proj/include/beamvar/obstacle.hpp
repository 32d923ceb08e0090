#pragma once

#include <vector>

#include "beamvar/fields.hpp"
#include "beamvar/grid.hpp"

namespace beamvar {

// Barrier family: max of the shifted cubic (lambda/2)x^2(x/3 - 1) - x^2/2 +
// eps and -pi. x_switch is where the cubic branch meets -pi.
struct ObstacleSpec {
    double lambda;
    double eps;
    double x_switch;

    // Solves x_switch; throws std::domain_error when the cubic branch stays
    // above -pi on [0,1] (lambda too small).
    static ObstacleSpec make(double lambda, double eps);
};

// Barrier value at x.
double phi_star(double x, const ObstacleSpec& spec);

// Least root in (0,1] of cubic(x) + eps = -pi, bisection to 1e-14 bracket
// width. Throws std::domain_error when undefined.
double x_lambda(double lambda, double eps);

// Nodal projection min(phi_i, phi_star(x_i)). Requires the grid to contain
// x_switch as a node so the barrier kink is resolved.
PhiField project_obstacle(const PhiField& phi, const ObstacleSpec& spec,
                          const Grid& g);

// Nodes where phi_star(x_i) - phi_i <= tol.
std::vector<int> touch_set(const PhiField& phi, const ObstacleSpec& spec,
                           const Grid& g, double tol);

}  // namespace beamvar
