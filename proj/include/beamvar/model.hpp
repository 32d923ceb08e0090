#pragma once

#include <utility>
#include <vector>

#include "beamvar/fields.hpp"
#include "beamvar/grid.hpp"

namespace beamvar {

// Shear-coupled bending energy
//   int_0^1  k/2 phi'^2 + (phi - theta)^2/2 - b(1-x) sin(theta) dx
// by midpoint quadrature: phi' cellwise constant, phi interpolated linearly
// to midpoints, theta living at midpoints.
double energy_full(const PhiField& phi, const ThetaField& theta,
                   const BeamParams& p, const Grid& g);

// Exact gradient of the discrete energy_full. First block is node-shaped with
// entry 0 pinned to zero (clamped dof), second block is cell-shaped.
std::pair<std::vector<double>, std::vector<double>>
gradient_full(const PhiField& phi, const ThetaField& theta,
              const BeamParams& p, const Grid& g);

// Euler limit energy  int_0^1 phi'^2/2 - lambda(1-x) sin(phi) dx, same
// quadrature, sin(phi) evaluated at midpoint-interpolated phi.
double energy_euler(const PhiField& phi, double lambda, const Grid& g);

// Node-shaped gradient of energy_euler, entry 0 pinned to zero.
std::vector<double> gradient_euler(const PhiField& phi, double lambda,
                                   const Grid& g);

// Midline from the tangent angle: cumulative midpoint integration of
// (cos theta, sin theta) from the origin. Chord lengths are exactly the cell
// widths.
PlanarCurve reconstruct_chi(const ThetaField& theta, const Grid& g);

// Linear interpolation of nodal values to cell midpoints.
std::vector<double> interpolate_midpoints(const PhiField& phi, const Grid& g);

}  // namespace beamvar
