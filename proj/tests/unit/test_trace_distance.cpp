#include <cmath>
#include <stdexcept>

#include "core/coherent.hpp"
#include "core/sweep.hpp"
#include "doctest.h"

using namespace bqa;

namespace {
const Schedule kSched{3.0, 0.1, 40.0};
}

TEST_CASE("distance is bounded and small away from transitions") {
    const ModelParams params{5, 0.0, 0.0, 0.0};
    for (const double s : {0.05, 0.3, 0.45, 0.7, 0.95}) {
        const auto r = trace_norm_distance(kSched, params, s, 20);
        CHECK(r.D >= 0.0);
        CHECK(r.D <= 1.0);
        CHECK(r.D < 0.15);
    }
}

TEST_CASE("distance peaks at the first-order point") {
    const ModelParams params{5, 0.0, 0.0, 0.0};
    const auto off = trace_norm_distance(kSched, params, 0.45, 20);
    const auto on = trace_norm_distance(kSched, params, 0.55, 20);
    CHECK(on.D > 0.3);
    CHECK(on.D > 5.0 * off.D);
}

TEST_CASE("scan matches pointwise evaluation") {
    const ModelParams params{5, 1.4, 0.0, 0.0};
    const std::vector<double> grid = {0.2, 0.4, 0.52, 0.6, 0.8};
    const auto scan = trace_distance_scan(kSched, params, grid, 12);
    REQUIRE(scan.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto one = trace_norm_distance(kSched, params, grid[i], 12);
        CHECK(scan[i].D == doctest::Approx(one.D).epsilon(1e-13));
        CHECK(scan[i].overlap ==
              doctest::Approx(one.overlap).epsilon(1e-13));
        CHECK(scan[i].energy_exact ==
              doctest::Approx(one.energy_exact).epsilon(1e-13));
    }
}

TEST_CASE("exact energy obeys the coherent-state variational bound") {
    // E <= <coherent|H|coherent> = N v_min + O(1) finite-size defect
    const ModelParams params{5, 1.4, 0.0, 0.0};
    const int N = 24;
    for (const double s : {0.2, 0.5, 0.52, 0.9}) {
        const auto r = trace_norm_distance(kSched, params, s, N);
        CHECK(r.energy_exact / N <= r.v_min_sc + 10.0 / N);
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(
        trace_norm_distance(kSched, ModelParams{5, 1.0, 0.2, 0.0}, 0.5, 10),
        std::domain_error);
    CHECK_THROWS_AS(
        trace_norm_distance(kSched, ModelParams{5, 1.0, 0.0, 0.0}, 0.5, 0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        trace_norm_distance(kSched, ModelParams{5, 1.0, 0.0, 0.0}, 1.2, 10),
        std::domain_error);
}
