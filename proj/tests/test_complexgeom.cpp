#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "geolab/complexgeom.hpp"

using namespace geolab;

static ProjPoint pp(std::vector<cplx> v) { return ProjPoint::from_unnormalized(std::move(v)); }

TEST_CASE("projective point normalization pins the largest coordinate to 1") {
    ProjPoint p = pp({cplx(0.0, 2.0), cplx(1.0, 0.0)});
    CHECK(p.coords[0] == cplx(1.0, 0.0));  // pivot rotated to exactly 1
    CHECK(std::abs(p.coords[1] - cplx(0.0, -0.5)) < 1e-15);

    // tie on modulus: lowest index wins
    ProjPoint q = pp({cplx(0.0, 1.0), cplx(1.0, 0.0)});
    CHECK(q.coords[0] == cplx(1.0, 0.0));

    CHECK_THROWS_AS(pp({cplx(0.0, 0.0), cplx(0.0, 0.0)}), std::domain_error);
}

TEST_CASE("derivative norm closed forms") {
    // [1:z] at z: lambda = 1/(1+|z|^2)
    CHECK(fs_deriv_norm({cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)}) == doctest::Approx(1.0));
    CHECK(fs_deriv_norm({cplx(1, 0), cplx(1, 0)}, {cplx(0, 0), cplx(1, 0)}) ==
          doctest::Approx(0.5));
    // [1:nz] at 0: lambda = n
    CHECK(fs_deriv_norm({cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(7, 0)}) ==
          doctest::Approx(7.0));
    // derivative parallel to the lift: zero projectivized speed
    CHECK(fs_deriv_norm({cplx(1, 0), cplx(2, 0)}, {cplx(3, 0), cplx(6, 0)}) ==
          doctest::Approx(0.0));
}

TEST_CASE("derivative norm is scale invariant in the lift") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<cplx> F(3), Fp(3);
        for (int i = 0; i < 3; ++i) {
            F[i] = cplx(gauss(rng), gauss(rng));
            Fp[i] = cplx(gauss(rng), gauss(rng));
        }
        double base = fs_deriv_norm(F, Fp);
        cplx s(gauss(rng) + 3.0, gauss(rng));
        std::vector<cplx> G(3), Gp(3);
        for (int i = 0; i < 3; ++i) {
            G[i] = s * F[i];
            Gp[i] = s * Fp[i];
        }
        CHECK(fs_deriv_norm(G, Gp) == doctest::Approx(base).epsilon(1e-10));
    }
}

TEST_CASE("projective distance examples and metric axioms") {
    CHECK(fs_distance(pp({cplx(1, 0), cplx(0, 0)}), pp({cplx(1, 0), cplx(0, 0)})) ==
          doctest::Approx(0.0));
    CHECK(fs_distance(pp({cplx(1, 0), cplx(0, 0)}), pp({cplx(0, 0), cplx(1, 0)})) ==
          doctest::Approx(M_PI / 2));
    CHECK(fs_distance(pp({cplx(1, 0), cplx(0, 0)}), pp({cplx(1, 0), cplx(1, 0)})) ==
          doctest::Approx(M_PI / 4));

    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    auto rand_point = [&] {
        std::vector<cplx> v(3);
        for (auto& c : v) c = cplx(gauss(rng), gauss(rng));
        return pp(std::move(v));
    };
    for (int trial = 0; trial < 200; ++trial) {
        ProjPoint a = rand_point(), b = rand_point(), c = rand_point();
        double ab = fs_distance(a, b);
        CHECK(ab == doctest::Approx(fs_distance(b, a)));
        CHECK(ab <= fs_distance(a, c) + fs_distance(c, b) + 1e-12);
        CHECK(ab >= 0.0);
        CHECK(ab <= M_PI / 2 + 1e-12);
    }
}

TEST_CASE("torus reduction") {
    auto r = torus_reduce(cplx(2.3, -0.7), cplx(5.1, 0.0));
    CHECK(r.point.rep[0] == doctest::Approx(0.3));
    CHECK(r.point.rep[1] == doctest::Approx(0.3));
    CHECK(r.point.rep[2] == doctest::Approx(0.1));
    CHECK(r.point.rep[3] == doctest::Approx(0.0));

    CHECK(torus_reduce(cplx(3.0, 4.0), cplx(-2.0, 7.0)).dist_to_origin ==
          doctest::Approx(0.0).epsilon(1e-12));
    // half-lattice point is at maximal distance from the origin class
    CHECK(torus_reduce(cplx(0.5, 0.5), cplx(0.5, 0.5)).dist_to_origin == doctest::Approx(1.0));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-9.0, 9.0);
    for (int trial = 0; trial < 300; ++trial) {
        cplx z1(u(rng), u(rng)), z2(u(rng), u(rng));
        auto red = torus_reduce(z1, z2);
        for (double comp : red.point.rep) {
            CHECK(comp >= 0.0);
            CHECK(comp < 1.0);
        }
        // reduction is idempotent
        auto again = torus_reduce(cplx(red.point.rep[0], red.point.rep[1]),
                                  cplx(red.point.rep[2], red.point.rep[3]));
        CHECK(again.dist_to_origin == doctest::Approx(red.dist_to_origin).epsilon(1e-12));
        // the distance never exceeds the half-diagonal of the fundamental cube
        CHECK(red.dist_to_origin <= 1.0 + 1e-12);
    }
}
