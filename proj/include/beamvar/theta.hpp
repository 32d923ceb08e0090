#pragma once

#include <vector>

#include "beamvar/fields.hpp"
#include "beamvar/grid.hpp"

namespace beamvar {

// Local data for the pointwise minimization of
//   H(theta) = -phi*theta + theta^2/2 - b(1-x) sin(theta).
struct PointwiseProblem {
    double phi_val;
    double x;
    double b;
};

// Label of the band I_n = [(2n-1)pi/2, (2n+1)pi/2].
struct BandIndex {
    int n;
};

// Smallest global minimizer of H. Stationary points theta - c*cos(theta) =
// phi (c = b(1-x)) are enumerated on the a-priori bracket
// |theta| <= |phi| + sqrt(2b + phi^2); ties in H break toward the smaller
// theta. Valid for any b > 0.
double pointwise_theta_argmin(const PointwiseProblem& prob);

// Unique solution of theta - b(1-x)*cos(theta) = phi_val for b < 1
// (the map is strictly increasing). Safeguarded Newton to residual < 1e-12.
double theta_implicit(double phi_val, double x, double b);

// theta_implicit applied at every midpoint with phi interpolated linearly.
// Requires b < 1; callers in the b >= 1 regime use pointwise_theta_argmin.
ThetaField theta_map(const PhiField& phi, const BeamParams& p, const Grid& g);

// Band of v, boundary values (2n+1)pi/2 assigned to the lower band n.
BandIndex band_classify(double v);

struct ThetaJump {
    double x;          // shared node between the two cells
    double magnitude;  // |theta_{i+1} - theta_i|
};

// Successive midpoint pairs whose theta values differ by more than delta.
std::vector<ThetaJump> detect_theta_jump(const ThetaField& theta,
                                         const Grid& g, double delta);

}  // namespace beamvar
