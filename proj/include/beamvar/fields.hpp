#pragma once

#include <array>
#include <vector>

#include "beamvar/grid.hpp"

namespace beamvar {

// Load density b, bending coefficient k, and their ratio lambda = b/k.
struct BeamParams {
    double b;
    double k;
    double lambda;

    static BeamParams make(double b, double k);
};

// Cross-section orientation, one value per grid node. Solver outputs satisfy
// the clamp values[0] == 0; raw evaluation of arbitrary fields is allowed.
struct PhiField {
    std::vector<double> values;

    static PhiField zero(const Grid& g);
    static PhiField constant(const Grid& g, double v);
};

// Tangent angle, one value per grid cell, located at the cell midpoint.
struct ThetaField {
    std::vector<double> values;

    static ThetaField zero(const Grid& g);
    static ThetaField constant(const Grid& g, double v);
};

// Beam midline, one point per grid node, starting at the origin. Chord
// lengths equal cell widths (discrete inextensibility).
struct PlanarCurve {
    std::vector<std::array<double, 2>> points;
};

}  // namespace beamvar
