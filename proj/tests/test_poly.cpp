#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "geolab/mvpoly.hpp"
#include "geolab/poly.hpp"

using namespace geolab;

namespace {
const cplx kOne(1.0, 0.0);
const cplx kZero(0.0, 0.0);
}

TEST_CASE("univariate arithmetic") {
    Poly p{kOne, cplx(2.0, 0.0), cplx(3.0, 0.0)};  // 1 + 2z + 3z^2
    CHECK(std::abs(poly_eval(p, cplx(2.0, 0.0)) - cplx(17.0, 0.0)) < 1e-14);
    Poly dp = poly_derivative(p);
    CHECK(std::abs(poly_eval(dp, kZero) - cplx(2.0, 0.0)) < 1e-15);
    CHECK(poly_degree(p) == 2);
    CHECK(poly_degree(Poly{kZero, kZero, kZero}) == 0);  // trim keeps one coefficient

    Poly sq = poly_mul(p, p);
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    for (int i = 0; i < 20; ++i) {
        cplx z(g(rng), g(rng));
        cplx v = poly_eval(p, z);
        CHECK(std::abs(poly_eval(sq, z) - v * v) < 1e-10 * (1.0 + std::abs(v * v)));
        CHECK(std::abs(poly_eval(poly_pow(p, 3), z) - v * v * v) <
              1e-9 * (1.0 + std::abs(v * v * v)));
    }
}

TEST_CASE("affine composition is exact") {
    Poly p{kOne, kZero, kOne};  // 1 + z^2
    Poly q = poly_compose_affine(p, cplx(1.0, 0.0), cplx(2.0, 0.0));
    // 1 + (1+2z)^2 = 2 + 4z + 4z^2
    CHECK(std::abs(q[0] - cplx(2.0, 0.0)) < 1e-15);
    CHECK(std::abs(q[1] - cplx(4.0, 0.0)) < 1e-15);
    CHECK(std::abs(q[2] - cplx(4.0, 0.0)) < 1e-15);
}

TEST_CASE("roots of products of known linear factors") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<cplx> roots(5);
        Poly p{kOne};
        for (auto& r : roots) {
            r = cplx(g(rng), g(rng));
            p = poly_mul(p, Poly{-r, kOne});
        }
        auto found = poly_roots(p);
        REQUIRE(found.size() == roots.size());
        for (const auto& r : roots) {
            double best = 1e9;
            for (const auto& f : found) best = std::min(best, std::abs(f - r));
            CHECK(best < 1e-8);
        }
    }
}

TEST_CASE("sparse multivariate basics") {
    MPoly x = MPoly::variable(3, 0), y = MPoly::variable(3, 1), z = MPoly::variable(3, 2);
    MPoly f = mv_add(mv_mul(x, y), mv_pow(z, 2));
    CHECK(f.is_homogeneous(2));
    CHECK(f.total_degree() == 2);
    CHECK(std::abs(f.eval({cplx(2, 0), cplx(3, 0), cplx(4, 0)}) - cplx(22.0, 0.0)) < 1e-14);
    MPoly lin = MPoly::linear_form({kOne, cplx(2.0, 0.0), cplx(0.0, 1.0)});
    CHECK(std::abs(lin.eval({kOne, kOne, kOne}) - cplx(3.0, 1.0)) < 1e-15);
}

TEST_CASE("restriction of a homogeneous polynomial to a line") {
    // q = x^2 on the line (t0, t1, 0): coefficients of t0^2, t0 t1, t1^2
    MPoly q = mv_pow(MPoly::variable(3, 0), 2);
    auto c = mv_restrict_to_line(q, {kOne, kZero, kZero}, {kZero, kOne, kZero});
    REQUIRE(c.size() == 3);
    CHECK(std::abs(c[0] - kOne) < 1e-15);
    CHECK(std::abs(c[1]) < 1e-15);
    CHECK(std::abs(c[2]) < 1e-15);

    // random homogeneous cubic: restriction agrees with direct evaluation
    std::mt19937_64 rng(31);
    std::normal_distribution<double> g;
    MPoly f = MPoly::zero(3);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            f.add_term({i, j, 3 - i - j}, cplx(g(rng), g(rng)));
    std::vector<cplx> b0(3), b1(3);
    for (auto& v : b0) v = cplx(g(rng), g(rng));
    for (auto& v : b1) v = cplx(g(rng), g(rng));
    auto coef = mv_restrict_to_line(f, b0, b1);
    REQUIRE(coef.size() == 4);
    for (int trial = 0; trial < 10; ++trial) {
        cplx t0(g(rng), g(rng)), t1(g(rng), g(rng));
        std::vector<cplx> pt(3);
        for (int i = 0; i < 3; ++i) pt[i] = t0 * b0[i] + t1 * b1[i];
        cplx direct = f.eval(pt);
        cplx via = kZero;
        for (int k = 0; k <= 3; ++k)
            via += coef[k] * std::pow(t0, 3 - k) * std::pow(t1, k);
        CHECK(std::abs(direct - via) < 1e-10 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("univariate substitution into a multivariate polynomial") {
    MPoly f = mv_add(MPoly::variable(2, 0), mv_pow(MPoly::variable(2, 1), 2));
    Poly one{kOne}, zed{kZero, kOne};
    Poly composed = mv_compose_univariate(f, {one, zed});  // 1 + z^2
    CHECK(std::abs(poly_eval(composed, cplx(3.0, 0.0)) - cplx(10.0, 0.0)) < 1e-14);
}
