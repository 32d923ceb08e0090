#include "beamvar/obstacle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "beamvar/numerics.hpp"

namespace beamvar {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Unshifted-to-eps cubic branch of the barrier; strictly decreasing on
// (0,1] since its derivative x(lambda x / 2 - lambda - 1) is negative there.
double cubic_branch(double x, double lambda, double eps) {
    return 0.5 * lambda * x * x * (x / 3.0 - 1.0) - 0.5 * x * x + eps;
}

void check_params(double lambda, double eps) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    if (!(eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
}

}  // namespace

ObstacleSpec ObstacleSpec::make(double lambda, double eps) {
    check_params(lambda, eps);
    return {lambda, eps, x_lambda(lambda, eps)};
}

double phi_star(double x, const ObstacleSpec& spec) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("x outside [0,1]");
    return std::max(cubic_branch(x, spec.lambda, spec.eps), -kPi);
}

double x_lambda(double lambda, double eps) {
    check_params(lambda, eps);
    // Monotone branch reaches -pi inside [0,1] iff its value at 1 is below.
    if (!(cubic_branch(1.0, lambda, eps) <= -kPi))
        throw std::domain_error("switch point undefined: barrier stays above -pi");
    auto f = [&](double x) { return cubic_branch(x, lambda, eps) + kPi; };
    return root_bisect(f, RootBracket::of(f, 0.0, 1.0), 1e-14);
}

PhiField project_obstacle(const PhiField& phi, const ObstacleSpec& spec,
                          const Grid& g) {
    if (static_cast<int>(phi.values.size()) != g.node_count())
        throw std::invalid_argument("phi field / grid size mismatch");
    if (g.node_index_of(spec.x_switch) < 0)
        throw std::invalid_argument("grid must contain the switch point node");
    PhiField out = phi;
    for (int i = 1; i < g.node_count(); ++i)
        out.values[i] = std::min(out.values[i], phi_star(g.nodes[i], spec));
    return out;
}

std::vector<int> touch_set(const PhiField& phi, const ObstacleSpec& spec,
                           const Grid& g, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (static_cast<int>(phi.values.size()) != g.node_count())
        throw std::invalid_argument("phi field / grid size mismatch");
    std::vector<int> touching;
    for (int i = 0; i < g.node_count(); ++i)
        if (phi_star(g.nodes[i], spec) - phi.values[i] <= tol)
            touching.push_back(i);
    return touching;
}

}  // namespace beamvar
