#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "geolab/greenpoly.hpp"

using namespace geolab;

namespace {

const cplx kOne(1.0, 0.0);

LineConfig5 standard5() {
    std::array<std::array<cplx, 3>, 5> f{};
    f[0] = {kOne, 0.0, 0.0};
    f[1] = {0.0, kOne, 0.0};
    f[2] = {0.0, 0.0, kOne};
    f[3] = {kOne, kOne, kOne};
    f[4] = {kOne, cplx(2.0, 0.0), cplx(3.0, 0.0)};
    return LineConfig5(f);
}

ProjPoint pp(std::vector<cplx> v) { return ProjPoint::from_unnormalized(std::move(v)); }

// brute-force membership oracle: min over the 10 triples of the max modulus
double margin_oracle(double eps, const ProjPoint& z) {
    double norm = 0.0;
    for (const auto& c : z.coords) norm = std::max(norm, std::abs(c));
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k) {
                double m = std::max({std::abs(z.coords[i]), std::abs(z.coords[j]),
                                     std::abs(z.coords[k])});
                worst = std::min(worst, m - eps * norm);
            }
    return worst;
}

}  // namespace

TEST_CASE("configurations with a triple point are rejected") {
    auto f = standard5().forms;
    f[4] = f[3];  // l4 = l5 makes every triple containing both degenerate
    CHECK_THROWS_AS(LineConfig5{f}, std::domain_error);
    std::array<std::array<cplx, 3>, 5> g{};
    g[0] = {kOne, 0.0, 0.0};
    g[1] = {0.0, kOne, 0.0};
    g[2] = {kOne, kOne, 0.0};  // passes through [0:0:1] with the first two
    g[3] = {0.0, 0.0, kOne};
    g[4] = {kOne, cplx(2, 0), cplx(3, 0)};
    CHECK_THROWS_AS(LineConfig5{g}, std::domain_error);
}

TEST_CASE("embedding the plane by the five forms") {
    LineConfig5 cfg = standard5();
    ProjPoint e1 = embed(cfg, pp({kOne, 0.0, 0.0}));
    CHECK(fs_distance(e1, pp({kOne, 0.0, 0.0, kOne, kOne})) < 1e-12);
    ProjPoint e3 = embed(cfg, pp({0.0, 0.0, kOne}));
    CHECK(fs_distance(e3, pp({0.0, 0.0, kOne, kOne, cplx(3.0, 0.0)})) < 1e-12);
    // on a generic point at most two coordinates can vanish
    for (int i = 0; i < 50; ++i) {
        ProjPoint z = random_proj_point(2, 99, std::uint64_t(i));
        ProjPoint e = embed(cfg, z);
        int near_zero = 0;
        for (const auto& c : e.coords)
            if (std::abs(c) < 1e-9) ++near_zero;
        CHECK(near_zero <= 2);
    }
}

TEST_CASE("coordinate power map") {
    ProjPoint p = power_map(2, pp({kOne, cplx(0.5, 0.0), cplx(0.0, 1.0)}));
    CHECK(fs_distance(p, pp({kOne, cplx(0.25, 0.0), cplx(-1.0, 0.0)})) < 1e-12);
    ProjPoint q = power_map(1, pp({kOne, cplx(0.3, 0.2)}));
    CHECK(fs_distance(q, pp({kOne, cplx(0.3, 0.2)})) < 1e-15);
}

TEST_CASE("membership against the enumeration oracle") {
    ProjPoint all_half = pp({kOne, kOne, kOne, cplx(0.0, 0.0), cplx(0.0, 0.0)});
    MembershipResult m1 = polyhedron_membership(1.0, all_half);
    CHECK(m1.member);
    CHECK(m1.margin == doctest::Approx(0.0));

    // only two large coordinates: some triple avoids both
    MembershipResult m2 =
        polyhedron_membership(1.0, pp({kOne, kOne, cplx(0.0, 0.0), cplx(0.0, 0.0),
                                       cplx(0.0, 0.0)}));
    CHECK_FALSE(m2.member);
    // ... but every nonzero point is in X_eps for tiny eps
    CHECK(polyhedron_membership(1e-12, pp({kOne, kOne, cplx(0.0, 0.0), cplx(0.0, 0.0),
                                           cplx(0.0, 0.0)}))
              .member == false);  // third largest is exactly 0
    CHECK(polyhedron_membership(1e-6, pp({kOne, kOne, cplx(1e-3, 0.0), cplx(0.0, 0.0),
                                          cplx(0.0, 0.0)}))
              .member);

    for (int i = 0; i < 200; ++i) {
        ProjPoint z = random_proj_point(4, 5, std::uint64_t(i));
        for (double eps : {0.1, 0.5, 0.9}) {
            MembershipResult m = polyhedron_membership(eps, z);
            CHECK(m.margin == doctest::Approx(margin_oracle(eps, z)).epsilon(1e-12));
            CHECK(m.member == (m.margin >= 0.0));
        }
    }
}

TEST_CASE("membership is monotone in eps") {
    for (int i = 0; i < 100; ++i) {
        ProjPoint z = random_proj_point(4, 21, std::uint64_t(i));
        bool prev = true;
        for (double eps : {0.05, 0.2, 0.5, 0.8, 0.99}) {
            bool now = polyhedron_membership(eps, z).member;
            if (!prev) CHECK_FALSE(now);  // shrinking sets as eps grows
            prev = now;
        }
    }
}

TEST_CASE("face decomposition") {
    auto faces = face_decomposition(pp({kOne, kOne, kOne, cplx(0.5, 0.0), cplx(0.2, 0.0)}));
    REQUIRE(faces.size() == 1);
    CHECK(faces[0] == std::array<int, 3>{0, 1, 2});
    CHECK(face_decomposition(pp({kOne, kOne, kOne, kOne, kOne})).size() == 10);
    CHECK_THROWS_AS(face_decomposition(pp({kOne, kOne, cplx(0.9, 0.0), cplx(0.1, 0.0),
                                           cplx(0.1, 0.0)})),
                    std::domain_error);
}

TEST_CASE("epsilon estimate for the standard configuration") {
    LineConfig5 cfg = standard5();
    EpsilonEstimate est = epsilon_for_config(cfg, 4000);
    CHECK(est.epsilon > 1e-4);
    CHECK(est.epsilon < 1.0);
    CHECK_FALSE(est.near_degenerate);
    // every embedded point must then lie in the estimated polyhedron
    for (int i = 0; i < 300; ++i) {
        ProjPoint z = random_proj_point(2, 7, std::uint64_t(i));
        CHECK(polyhedron_membership(est.epsilon, embed(cfg, z)).member);
    }
}

TEST_CASE("a near-triple-point configuration is flagged") {
    std::array<std::array<cplx, 3>, 5> f{};
    f[0] = {kOne, 0.0, 0.0};
    f[1] = {0.0, kOne, 0.0};
    f[2] = {0.0, 0.0, kOne};
    f[3] = {kOne, kOne, cplx(1e-4, 0.0)};  // nearly passes through [0:0:1] = l1 cap l2
    f[4] = {kOne, cplx(2.0, 0.0), cplx(3.0, 0.0)};
    LineConfig5 cfg(f);
    EpsilonEstimate est = epsilon_for_config(cfg, 4000);
    CHECK(est.epsilon < 1e-3);
    CHECK(est.near_degenerate);
}

TEST_CASE("power map preimage identity") {
    // n = 1 is trivially exact
    CHECK(power_preimage_identity_check(0.3, 1, 500, 1) == 0);
    for (double eps : {0.1, 0.25, 0.5})
        for (int n : {2, 3, 5}) CHECK(power_preimage_identity_check(eps, n, 1000, 42) == 0);
    // pointwise instance: z in X_{eps^{1/2}} iff F_2(z) in X_eps
    ProjPoint z = pp({kOne, cplx(0.5, 0.0), kOne, kOne, kOne});
    bool lhs = polyhedron_membership(std::sqrt(0.25), z).member;
    bool rhs = polyhedron_membership(0.25, power_map(2, z)).member;
    CHECK(lhs == rhs);
    CHECK_THROWS_AS(power_preimage_identity_check(1.5, 2, 10, 1), std::invalid_argument);
}
