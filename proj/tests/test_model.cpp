#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "beamvar/fields.hpp"
#include "beamvar/grid.hpp"
#include "beamvar/model.hpp"
#include "beamvar/theta.hpp"

using namespace beamvar;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("energy vanishes on the trivial configuration") {
    const Grid g = Grid::uniform(16);
    const BeamParams p = BeamParams::make(0.7, 0.3);
    CHECK(energy_full(PhiField::zero(g), ThetaField::zero(g), p, g) == 0.0);
}

TEST_CASE("energy reproduces closed forms for constant fields") {
    const Grid g = Grid::uniform(64);

    SUBCASE("mismatch plus full load, phi=0, theta=pi/2") {
        // k/2*0 + (pi/2)^2/2 - (1-x): midpoint rule is exact for both
        // (constant and linear integrands).
        const BeamParams p = BeamParams::make(1.0, 1.0);
        const double e = energy_full(PhiField::zero(g),
                                     ThetaField::constant(g, kPi / 2.0), p, g);
        CHECK(e == doctest::Approx(kPi * kPi / 8.0 - 0.5).epsilon(1e-14));
    }

    SUBCASE("linear phi against zero theta, no load") {
        // k/2 + x^2/2 integrates to 2/3; the midpoint rule error on x^2/2 is
        // exactly h^2/24.
        const BeamParams p = BeamParams::make(1e-300, 1.0);
        auto run = [&](int n) {
            const Grid gg = Grid::uniform(n);
            PhiField phi = PhiField::zero(gg);
            for (int i = 0; i < gg.node_count(); ++i)
                phi.values[i] = gg.nodes[i];
            return energy_full(phi, ThetaField::zero(gg), p, gg);
        };
        CHECK(std::abs(run(128) - 2.0 / 3.0) < 3e-6);
        CHECK(std::abs(run(256) - 2.0 / 3.0) < 8e-7);
    }
}

TEST_CASE("energy rejects mis-shaped fields") {
    const Grid g = Grid::uniform(8);
    const BeamParams p = BeamParams::make(0.5, 0.5);
    PhiField phi = PhiField::zero(g);
    phi.values.pop_back();
    CHECK_THROWS_AS(energy_full(phi, ThetaField::zero(g), p, g),
                    std::invalid_argument);
    ThetaField th = ThetaField::zero(g);
    th.values.push_back(0.0);
    CHECK_THROWS_AS(energy_full(PhiField::zero(g), th, p, g),
                    std::invalid_argument);
    CHECK_THROWS_AS(BeamParams::make(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BeamParams::make(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("theta gradient block at zero fields is the load derivative") {
    const Grid g = Grid::uniform(32);
    const BeamParams p = BeamParams::make(0.8, 0.2);
    const auto [gp, gt] =
        gradient_full(PhiField::zero(g), ThetaField::zero(g), p, g);
    CHECK(gp.size() == static_cast<std::size_t>(g.node_count()));
    CHECK(gt.size() == static_cast<std::size_t>(g.cells()));
    CHECK(gp[0] == 0.0);  // clamped dof
    for (int i = 0; i < g.cells(); ++i) {
        const double expect = -g.width(i) * p.b * (1.0 - g.midpoints[i]);
        CHECK(gt[i] == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("gradient matches central finite differences") {
    const Grid g = Grid::uniform(64);
    const BeamParams p = BeamParams::make(0.9, 0.11);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1.5, 1.5);

    PhiField phi = PhiField::zero(g);
    for (int i = 1; i < g.node_count(); ++i) phi.values[i] = u(rng);
    ThetaField th = ThetaField::zero(g);
    for (int i = 0; i < g.cells(); ++i) th.values[i] = u(rng);

    const auto [gp, gt] = gradient_full(phi, th, p, g);

    // Norm-wise comparison; entrywise ratios blow up where a single
    // component happens to vanish.
    double max_diff = 0.0;
    double max_fd = 0.0;
    auto fd_check = [&](auto& values, const std::vector<double>& grad,
                        std::size_t i) {
        const double v = values[i];
        const double step = 1e-6 * (1.0 + std::abs(v));
        values[i] = v + step;
        const double ep = energy_full(phi, th, p, g);
        values[i] = v - step;
        const double em = energy_full(phi, th, p, g);
        values[i] = v;
        const double fd = (ep - em) / (2.0 * step);
        max_diff = std::max(max_diff, std::abs(grad[i] - fd));
        max_fd = std::max(max_fd, std::abs(fd));
    };
    for (int i = 1; i < g.node_count(); ++i)
        fd_check(phi.values, gp, static_cast<std::size_t>(i));
    for (int i = 0; i < g.cells(); ++i)
        fd_check(th.values, gt, static_cast<std::size_t>(i));
    CHECK(max_diff / max_fd < 1e-6);
}

TEST_CASE("limit energy agrees with the full energy at matched fields") {
    const Grid g = Grid::uniform(48);
    const double lambda = 1.0;

    CHECK(energy_euler(PhiField::zero(g), lambda, g) == 0.0);

    // Constant pi/2 everywhere (raw evaluation, clamp not enforced):
    // 0 - (1-x) integrates to -1/2 exactly under the midpoint rule.
    const PhiField flat = PhiField::constant(g, kPi / 2.0);
    CHECK(energy_euler(flat, lambda, g) ==
          doctest::Approx(-0.5).epsilon(1e-14));

    // With theta forced to the midpoint interpolant of phi and k = 1, the
    // mismatch term dies and both quadratures coincide.
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    PhiField phi = PhiField::zero(g);
    for (int i = 1; i < g.node_count(); ++i) phi.values[i] = u(rng);
    ThetaField th = ThetaField::zero(g);
    th.values = interpolate_midpoints(phi, g);
    const BeamParams p = BeamParams::make(lambda, 1.0);
    const double e_full = energy_full(phi, th, p, g);
    const double e_limit = energy_euler(phi, lambda, g);
    CHECK(std::abs(e_full - e_limit) <= 1e-14 * (1.0 + std::abs(e_full)));
}

TEST_CASE("limit gradient matches central finite differences") {
    const Grid g = Grid::uniform(48);
    const double lambda = 17.0;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 1.0);
    PhiField phi = PhiField::zero(g);
    for (int i = 1; i < g.node_count(); ++i) phi.values[i] = u(rng);

    const std::vector<double> grad = gradient_euler(phi, lambda, g);
    CHECK(grad[0] == 0.0);
    double max_diff = 0.0;
    double max_fd = 0.0;
    for (int i = 1; i < g.node_count(); ++i) {
        const double v = phi.values[i];
        const double step = 1e-6 * (1.0 + std::abs(v));
        phi.values[i] = v + step;
        const double ep = energy_euler(phi, lambda, g);
        phi.values[i] = v - step;
        const double em = energy_euler(phi, lambda, g);
        phi.values[i] = v;
        const double fd = (ep - em) / (2.0 * step);
        max_diff = std::max(max_diff, std::abs(grad[i] - fd));
        max_fd = std::max(max_fd, std::abs(fd));
    }
    CHECK(max_diff / max_fd < 1e-6);
}

TEST_CASE("midline reconstruction integrates the tangent field") {
    const Grid g = Grid::uniform(200);

    SUBCASE("straight configurations") {
        const PlanarCurve flat = reconstruct_chi(ThetaField::zero(g), g);
        CHECK(flat.points.front()[0] == 0.0);
        CHECK(flat.points.front()[1] == 0.0);
        CHECK(flat.points.back()[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(flat.points.back()[1] == doctest::Approx(0.0).epsilon(1e-14));

        const PlanarCurve up =
            reconstruct_chi(ThetaField::constant(g, kPi / 2.0), g);
        CHECK(up.points.back()[0] == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(up.points.back()[1] == doctest::Approx(1.0).epsilon(1e-14));
    }

    SUBCASE("half turn reaches (0, 2/pi) up to quadrature error") {
        ThetaField th = ThetaField::zero(g);
        for (int i = 0; i < g.cells(); ++i)
            th.values[i] = kPi * g.midpoints[i];
        const PlanarCurve c = reconstruct_chi(th, g);
        CHECK(std::abs(c.points.back()[0] - 0.0) < 1e-4);
        CHECK(std::abs(c.points.back()[1] - 2.0 / kPi) < 1e-4);
    }

    SUBCASE("chord lengths equal cell widths") {
        ThetaField th = ThetaField::zero(g);
        for (int i = 0; i < g.cells(); ++i)
            th.values[i] = std::sin(3.0 * g.midpoints[i]);
        const PlanarCurve c = reconstruct_chi(th, g);
        REQUIRE(c.points.size() == static_cast<std::size_t>(g.node_count()));
        for (int i = 0; i < g.cells(); ++i) {
            const double dx = c.points[i + 1][0] - c.points[i][0];
            const double dy = c.points[i + 1][1] - c.points[i][1];
            CHECK(std::sqrt(dx * dx + dy * dy) ==
                  doctest::Approx(g.width(i)).epsilon(1e-12));
        }
    }
}

TEST_CASE("eliminated tangent is energetically optimal cell by cell") {
    const Grid g = Grid::uniform(40);
    const BeamParams p = BeamParams::make(0.5, 0.2);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);

    PhiField phi = PhiField::zero(g);
    for (int i = 1; i < g.node_count(); ++i) phi.values[i] = u(rng);
    const ThetaField best = theta_map(phi, p, g);
    const double e_best = energy_full(phi, best, p, g);

    for (int trial = 0; trial < 100; ++trial) {
        ThetaField th = ThetaField::zero(g);
        for (int i = 0; i < g.cells(); ++i) th.values[i] = u(rng);
        CHECK(e_best <= energy_full(phi, th, p, g) + 1e-12);
    }
}
