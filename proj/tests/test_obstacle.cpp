#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "beamvar/fields.hpp"
#include "beamvar/grid.hpp"
#include "beamvar/obstacle.hpp"

using namespace beamvar;

namespace {
constexpr double kPi = 3.14159265358979323846;

double cubic(double x, double lambda, double eps) {
    return 0.5 * lambda * x * x * (x / 3.0 - 1.0) - 0.5 * x * x + eps;
}
}  // namespace

TEST_CASE("barrier evaluates the cubic branch then clamps at -pi") {
    const ObstacleSpec s = ObstacleSpec::make(100.0, 0.0);
    CHECK(phi_star(0.0, s) == 0.0);
    CHECK(std::abs(phi_star(0.2, s) - cubic(0.2, 100.0, 0.0)) < 1e-14);
    CHECK(std::abs(phi_star(0.2, s) + 1.8866666666666667) < 1e-12);
    CHECK(phi_star(1.0, s) == -kPi);
    CHECK(phi_star(0.9, s) == -kPi);
    CHECK(std::abs(phi_star(s.x_switch, s) + kPi) < 1e-12);

    const ObstacleSpec shifted = ObstacleSpec::make(100.0, 0.2);
    CHECK(phi_star(0.0, shifted) == doctest::Approx(0.2).epsilon(1e-14));

    CHECK_THROWS_AS(phi_star(-0.1, s), std::invalid_argument);
    CHECK_THROWS_AS(phi_star(1.1, s), std::invalid_argument);
}

TEST_CASE("barrier is non-increasing up to the switch point") {
    const ObstacleSpec s = ObstacleSpec::make(42.0, 0.0);
    double prev = phi_star(0.0, s);
    for (int i = 1; i <= 200; ++i) {
        const double x = s.x_switch * i / 200.0;
        const double v = phi_star(x, s);
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
}

TEST_CASE("switch point matches reference values") {
    CHECK(std::abs(x_lambda(100.0, 0.0) - 0.260904515677) < 1e-9);
    CHECK(std::abs(x_lambda(15.0, 0.0) - 0.710470964873) < 1e-9);
    CHECK(std::abs(x_lambda(1000.0, 0.0) - 0.080308042338) < 1e-9);
    CHECK(std::abs(x_lambda(10000.0, 0.0) - 0.025170836519) < 1e-9);
    CHECK(std::abs(cubic(x_lambda(100.0, 0.0), 100.0, 0.0) + kPi) < 1e-12);
}

TEST_CASE("switch point is undefined for weak loads") {
    CHECK_THROWS_AS(x_lambda(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(ObstacleSpec::make(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(x_lambda(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(x_lambda(100.0, -0.1), std::invalid_argument);
}

TEST_CASE("switch point decreases with the load") {
    const double a = x_lambda(15.0, 0.0);
    const double b = x_lambda(42.0, 0.0);
    const double c = x_lambda(100.0, 0.0);
    const double d = x_lambda(1000.0, 0.0);
    CHECK(a > b);
    CHECK(b > c);
    CHECK(c > d);
}

TEST_CASE("shifted switch points approach the unshifted one from above") {
    const double base = x_lambda(100.0, 0.0);
    double prev = x_lambda(100.0, 0.4);
    for (double eps : {0.2, 0.1, 0.05, 0.025}) {
        const double cur = x_lambda(100.0, eps);
        CHECK(cur < prev);
        CHECK(cur > base);
        prev = cur;
    }
    CHECK(std::abs(x_lambda(100.0, 0.025) - base) <
          std::abs(x_lambda(100.0, 0.4) - base));
}

TEST_CASE("scaled switch points converge to the universal constant") {
    const double target = 2.0 * kPi;
    double prev = 1e300;
    for (double lambda : {100.0, 1000.0, 10000.0}) {
        const double x = x_lambda(lambda, 0.0);
        const double gap = std::abs(lambda * x * x - target);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 0.02 * target);
}

TEST_CASE("projection clips exactly onto the barrier") {
    const ObstacleSpec s = ObstacleSpec::make(100.0, 0.0);
    const Grid g = Grid::uniform_with_knot(64, s.x_switch);

    PhiField above = PhiField::constant(g, 5.0);
    const PhiField proj = project_obstacle(above, s, g);
    CHECK(proj.values[0] == 5.0);  // clamped dof is left to the pin
    for (int i = 1; i < g.node_count(); ++i)
        CHECK(proj.values[i] == phi_star(g.nodes[i], s));

    PhiField below = PhiField::constant(g, -6.0);
    const PhiField kept = project_obstacle(below, s, g);
    for (int i = 0; i < g.node_count(); ++i)
        CHECK(kept.values[i] == -6.0);

    const PhiField twice = project_obstacle(proj, s, g);
    for (int i = 0; i < g.node_count(); ++i)
        CHECK(twice.values[i] == proj.values[i]);

    const Grid plain = Grid::uniform(64);
    CHECK_THROWS_AS(project_obstacle(above, s, plain), std::invalid_argument);
}

TEST_CASE("touch set lists exactly the contact nodes") {
    const ObstacleSpec s = ObstacleSpec::make(100.0, 0.0);
    const Grid g = Grid::uniform_with_knot(32, s.x_switch);

    PhiField on = PhiField::zero(g);
    for (int i = 0; i < g.node_count(); ++i)
        on.values[i] = phi_star(g.nodes[i], s);
    CHECK(touch_set(on, s, g, 1e-12).size() ==
          static_cast<std::size_t>(g.node_count()));

    PhiField off = on;
    for (double& v : off.values) v -= 1.0;
    CHECK(touch_set(off, s, g, 1e-6).empty());

    PhiField one = off;
    one.values[5] = phi_star(g.nodes[5], s);
    const auto t = touch_set(one, s, g, 1e-6);
    REQUIRE(t.size() == 1);
    CHECK(t[0] == 5);

    CHECK_THROWS_AS(touch_set(on, s, g, 0.0), std::invalid_argument);
}
