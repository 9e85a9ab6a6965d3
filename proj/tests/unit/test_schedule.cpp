#include <cmath>
#include <stdexcept>

#include "core/schedule.hpp"
#include "doctest.h"

using namespace bqa;

namespace {
const Schedule kSched{3.0, 0.1, 40.0};
}

TEST_CASE("canonical schedule values") {
    const auto mid = schedule_eval(kSched, 0.5);
    CHECK(mid.A == 3.0);  // Gaussian peak
    CHECK(mid.B == 0.0);

    const auto end = schedule_eval(kSched, 1.0);
    CHECK(end.A == doctest::Approx(3.0 * std::exp(-5.0)).epsilon(1e-15));
    CHECK(end.A == doctest::Approx(0.020213840997256).epsilon(1e-12));
    CHECK(end.B == 40.0);

    const auto start = schedule_eval(kSched, 0.0);
    CHECK(start.A == end.A);
    CHECK(start.B == -40.0);
}

TEST_CASE("schedule symmetry is exact on a dyadic grid") {
    for (int k = 0; k <= 1024; ++k) {
        const double s = k / 1024.0;
        const auto fwd = schedule_eval(kSched, s);
        const auto rev = schedule_eval(kSched, 1.0 - s);
        CHECK(fwd.A == rev.A);
        CHECK(fwd.B == -rev.B);
    }
}

TEST_CASE("A stays positive and B is linear") {
    for (int k = 0; k <= 200; ++k) {
        const double s = k / 200.0;
        const auto v = schedule_eval(kSched, s);
        CHECK(v.A > 0.0);
        CHECK(v.B == doctest::Approx(40.0 * (2.0 * s - 1.0)).epsilon(1e-15));
    }
}

TEST_CASE("domain and argument errors") {
    CHECK_THROWS_AS(schedule_eval(kSched, -0.01), std::domain_error);
    CHECK_THROWS_AS(schedule_eval(kSched, 1.01), std::domain_error);
    CHECK_THROWS_AS(validate(Schedule{0.0, 0.1, 40.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Schedule{3.0, -1.0, 40.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Schedule{3.0, 0.1, 0.0}), std::invalid_argument);
    CHECK_NOTHROW(validate(kSched));
}
