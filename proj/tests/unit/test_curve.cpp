#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/minimize.hpp"
#include "core/sweep.hpp"
#include "doctest.h"

using namespace bqa;

namespace {

constexpr double kPi = std::numbers::pi;

// Long-double potential on the phi = pi/2, alpha = beta = 0 section for the
// finite-difference residual oracle.
long double v_ld(long double A, long double B, long double C, int p,
                 long double th, long double ph) {
    const long double sh = sinl(0.5L * th);
    const long double s2 = sh * sh;
    const long double drv = -(A / sqrtl(2.0L)) * sinl(th) *
                            (cosl(0.5L * ph) + sinl(0.5L * ph));
    const long double k = s2 * sinl(ph);
    long double prob = 1.0L;
    for (int i = 0; i < p; ++i) prob *= s2 * cosl(ph);
    return drv - B * s2 + C * k * k - prob;
}

}  // namespace

TEST_CASE("closed-form point: C = 2, theta = pi/2 maps to (A, B) = (4, 2)") {
    const ModelParams params{5, 2.0, 0.0, 0.0};
    const auto curve = second_order_curve(params, {0.5 * kPi});
    REQUIRE(curve.size() == 1);
    CHECK(std::abs(curve[0].A - 4.0) <= 1e-9);
    CHECK(std::abs(curve[0].B - 2.0) <= 1e-9);
}

TEST_CASE("curve approaches the origin as theta -> 0") {
    for (const double C : {0.5, 1.7, 4.0}) {
        const ModelParams params{5, C, 0.0, 0.0};
        const auto curve = second_order_curve(params, {1e-3});
        CHECK(std::abs(curve[0].A) < 1e-5 * C);
        CHECK(std::abs(curve[0].B) < 1e-5 * C);
    }
}

TEST_CASE("stationarity residuals vanish along the curve") {
    const ModelParams params{5, 1.4, 0.0, 0.0};
    const auto thetas = linspace(0.05, 2.2, 100);
    const auto curve = second_order_curve(params, thetas);

    for (const auto& pt : curve) {
        // closed-form theta derivative at (theta, pi/2, 0, 0)
        const PotentialGrad g = potential_grad_ab(
            pt.A, pt.B, params, {pt.theta, 0.5 * kPi, 0.0, 0.0});
        CHECK(std::abs(g.theta) <= 1e-9);

        // finite-difference residuals in long double
        const long double h1 = 1e-6L, h2 = 1e-4L;
        const long double th = pt.theta, ph = 0.5L * kPi;
        const long double dth =
            (v_ld(pt.A, pt.B, params.C, params.p, th + h1, ph) -
             v_ld(pt.A, pt.B, params.C, params.p, th - h1, ph)) /
            (2.0L * h1);
        const long double dpp =
            (v_ld(pt.A, pt.B, params.C, params.p, th, ph + h2) -
             2.0L * v_ld(pt.A, pt.B, params.C, params.p, th, ph) +
             v_ld(pt.A, pt.B, params.C, params.p, th, ph - h2)) /
            (h2 * h2);
        CHECK(std::abs(static_cast<double>(dth)) <= 1e-6);
        CHECK(std::abs(static_cast<double>(dpp)) <= 1e-6);
    }
}

TEST_CASE("phi = pi/2 is always stationary in phi on the curve") {
    const ModelParams params{3, 2.5, 0.0, 0.0};
    const auto curve = second_order_curve(params, linspace(0.2, 2.0, 20));
    for (const auto& pt : curve) {
        const PotentialGrad g = potential_grad_ab(
            pt.A, pt.B, params, {pt.theta, 0.5 * kPi, 0.0, 0.0});
        CHECK(std::abs(g.phi) <= 1e-10);
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(
        second_order_curve(ModelParams{5, 0.0, 0.0, 0.0}, {1.0}),
        std::domain_error);
    CHECK_THROWS_AS(
        second_order_curve(ModelParams{5, -1.0, 0.0, 0.0}, {1.0}),
        std::domain_error);
    CHECK_THROWS_AS(
        second_order_curve(ModelParams{5, 2.0, 0.3, 0.0}, {1.0}),
        std::domain_error);
    CHECK_THROWS_AS(second_order_curve(ModelParams{5, 2.0, 0.0, 0.0}, {0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(second_order_curve(ModelParams{5, 2.0, 0.0, 0.0}, {kPi}),
                    std::domain_error);
}
