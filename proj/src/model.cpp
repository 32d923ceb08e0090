#include "beamvar/model.hpp"

#include <cmath>
#include <stdexcept>

namespace beamvar {

namespace {

void check_shapes(const PhiField& phi, const Grid& g) {
    if (static_cast<int>(phi.values.size()) != g.node_count())
        throw std::invalid_argument("phi field / grid size mismatch");
}

void check_shapes(const ThetaField& theta, const Grid& g) {
    if (static_cast<int>(theta.values.size()) != g.cells())
        throw std::invalid_argument("theta field / grid size mismatch");
}

}  // namespace

BeamParams BeamParams::make(double b, double k) {
    if (!(b > 0.0) || !(k > 0.0))
        throw std::invalid_argument("beam parameters must be positive");
    return {b, k, b / k};
}

PhiField PhiField::zero(const Grid& g) {
    return {std::vector<double>(g.node_count(), 0.0)};
}

PhiField PhiField::constant(const Grid& g, double v) {
    return {std::vector<double>(g.node_count(), v)};
}

ThetaField ThetaField::zero(const Grid& g) {
    return {std::vector<double>(g.cells(), 0.0)};
}

ThetaField ThetaField::constant(const Grid& g, double v) {
    return {std::vector<double>(g.cells(), v)};
}

double energy_full(const PhiField& phi, const ThetaField& theta,
                   const BeamParams& p, const Grid& g) {
    check_shapes(phi, g);
    check_shapes(theta, g);
    double e = 0.0;
    for (int i = 0; i < g.cells(); ++i) {
        const double h = g.width(i);
        const double slope = (phi.values[i + 1] - phi.values[i]) / h;
        const double pb = 0.5 * (phi.values[i] + phi.values[i + 1]);
        const double th = theta.values[i];
        const double c = p.b * (1.0 - g.midpoints[i]);
        e += h * (0.5 * p.k * slope * slope + 0.5 * (pb - th) * (pb - th)
                  - c * std::sin(th));
    }
    return e;
}

std::pair<std::vector<double>, std::vector<double>>
gradient_full(const PhiField& phi, const ThetaField& theta,
              const BeamParams& p, const Grid& g) {
    check_shapes(phi, g);
    check_shapes(theta, g);
    std::vector<double> gphi(g.node_count(), 0.0);
    std::vector<double> gtheta(g.cells(), 0.0);
    for (int i = 0; i < g.cells(); ++i) {
        const double h = g.width(i);
        const double slope = (phi.values[i + 1] - phi.values[i]) / h;
        const double pb = 0.5 * (phi.values[i] + phi.values[i + 1]);
        const double th = theta.values[i];
        const double c = p.b * (1.0 - g.midpoints[i]);
        const double coup = 0.5 * h * (pb - th);
        gphi[i] += coup - p.k * slope;
        gphi[i + 1] += coup + p.k * slope;
        gtheta[i] = h * (-(pb - th) - c * std::cos(th));
    }
    gphi[0] = 0.0;  // clamped dof
    return {std::move(gphi), std::move(gtheta)};
}

double energy_euler(const PhiField& phi, double lambda, const Grid& g) {
    check_shapes(phi, g);
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    double e = 0.0;
    for (int i = 0; i < g.cells(); ++i) {
        const double h = g.width(i);
        const double slope = (phi.values[i + 1] - phi.values[i]) / h;
        const double pb = 0.5 * (phi.values[i] + phi.values[i + 1]);
        e += h * (0.5 * slope * slope
                  - lambda * (1.0 - g.midpoints[i]) * std::sin(pb));
    }
    return e;
}

std::vector<double> gradient_euler(const PhiField& phi, double lambda,
                                   const Grid& g) {
    check_shapes(phi, g);
    std::vector<double> grad(g.node_count(), 0.0);
    for (int i = 0; i < g.cells(); ++i) {
        const double h = g.width(i);
        const double slope = (phi.values[i + 1] - phi.values[i]) / h;
        const double pb = 0.5 * (phi.values[i] + phi.values[i + 1]);
        const double coup =
            -0.5 * h * lambda * (1.0 - g.midpoints[i]) * std::cos(pb);
        grad[i] += coup - slope;
        grad[i + 1] += coup + slope;
    }
    grad[0] = 0.0;
    return grad;
}

PlanarCurve reconstruct_chi(const ThetaField& theta, const Grid& g) {
    check_shapes(theta, g);
    PlanarCurve curve;
    curve.points.resize(g.node_count());
    curve.points[0] = {0.0, 0.0};
    for (int i = 0; i < g.cells(); ++i) {
        const double h = g.width(i);
        curve.points[i + 1] = {
            curve.points[i][0] + h * std::cos(theta.values[i]),
            curve.points[i][1] + h * std::sin(theta.values[i]),
        };
    }
    return curve;
}

std::vector<double> interpolate_midpoints(const PhiField& phi, const Grid& g) {
    check_shapes(phi, g);
    std::vector<double> mid(g.cells());
    for (int i = 0; i < g.cells(); ++i)
        mid[i] = 0.5 * (phi.values[i] + phi.values[i + 1]);
    return mid;
}

}  // namespace beamvar
