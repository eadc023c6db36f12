#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "geolab/winkelmann.hpp"

using namespace geolab;

TEST_CASE("slope validation") {
    CHECK_THROWS_AS(LineDiscScenario(0.5, 1), std::domain_error);
    CHECK_THROWS_AS(LineDiscScenario(3.0 / 7.0, 1), std::domain_error);
    CHECK_THROWS_AS(LineDiscScenario(0.0, 1), std::domain_error);
    CHECK_NOTHROW(LineDiscScenario(golden_slope(), 1));
    CHECK(golden_slope() == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0));
}

TEST_CASE("disc evaluation on the torus") {
    double lam = golden_slope();
    LineDiscScenario s(lam, 1);
    CHECK(s.at(cplx(0.0, 0.0)).dist_to_origin == doctest::Approx(0.0));
    auto r = s.at(cplx(1.0, 0.0));
    // (1, lambda) reduces to (0, lambda)
    CHECK(r.point.rep[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.point.rep[2] == doctest::Approx(lam));

    LineDiscScenario s7(lam, 7, cplx(0.25, 0.0), cplx(0.5, 0.0));
    auto r7 = s7.at(cplx(0.0, 0.0));
    CHECK(r7.point.rep[0] == doctest::Approx(0.25));
    CHECK(r7.point.rep[2] == doctest::Approx(0.5));
    CHECK(s7.flat_deriv_norm() == doctest::Approx(7.0 * std::sqrt(1.0 + lam * lam)));
}

TEST_CASE("lift norm: flat part away from the center, spike near it") {
    double lam = golden_slope();
    LineDiscScenario s(lam, 5);
    // the line through p: at z = 0 the direction coordinate matches the slope,
    // so the direction term vanishes and only the flat speed remains
    CHECK(lift_deriv_norm(s, cplx(0.0, 0.0)) == doctest::Approx(s.flat_deriv_norm()));
    // far from p (e.g. near the half-lattice point) the chart term is off
    LineDiscScenario far(lam, 5, cplx(0.5, 0.5), cplx(0.5, 0.5));
    CHECK(lift_deriv_norm(far, cplx(0.0, 0.0)) == doctest::Approx(far.flat_deriv_norm()));

    // a near miss of size d produces a spike of order n/d
    double d = 0.005;
    LineDiscScenario near(lam, 5, cplx(0.0, 0.0), cplx(d, 0.0));
    double spike = lift_deriv_norm(near, cplx(0.0, 0.0));
    CHECK(spike == doctest::Approx(std::hypot(near.flat_deriv_norm(), 5.0 / d)).epsilon(1e-9));
    CHECK(spike > 10.0 * 5.0);

    // disabling the chart term removes the spike
    LineDiscScenario control = near;
    control.fs_term_enabled = false;
    CHECK(lift_deriv_norm(control, cplx(0.0, 0.0)) == doctest::Approx(near.flat_deriv_norm()));
}

TEST_CASE("box masses equidistribute as n grows") {
    double lam = golden_slope();
    LineDiscScenario coarse(lam, 1);
    auto rep1 = equidistribution_report(coarse, 4, 400000);
    double sum = 0.0;
    for (double m : rep1.masses) sum += m;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep1.max_relative_deviation > 0.3);  // a single winding is far from uniform

    LineDiscScenario fine(lam, 200);
    auto rep200 = equidistribution_report(fine, 4);
    sum = 0.0;
    for (double m : rep200.masses) {
        CHECK(m >= 0.0);
        sum += m;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep200.max_relative_deviation < 0.05);
}

TEST_CASE("derivative maximum migrates to the blown-up point") {
    double lam = golden_slope();
    cplx q1(0.3, 0.2), q2(0.31, 0.17);
    auto entries = brody_locus_report(lam, q1, q2, {10, 20, 40});
    REQUIRE(entries.size() == 3);
    double run_min = std::numeric_limits<double>::infinity();
    for (const auto& e : entries) {
        CHECK(e.lift_norm >= e.n * std::sqrt(1.0 + lam * lam) * 0.2);
        run_min = std::min(run_min, e.dist_to_p);
        // without the chart term the maximum stays at the center, far from p
        CHECK(e.control_dist > 0.2);
    }
    CHECK(run_min <= entries.front().dist_to_p + 1e-12);
    CHECK(entries.back().dist_to_p < 0.15);  // already closing in at n = 40
}
