#include "geolab/greenpoly.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace geolab {

namespace {

const std::array<std::array<int, 3>, 10> kTriples = {{{0, 1, 2},
                                                      {0, 1, 3},
                                                      {0, 1, 4},
                                                      {0, 2, 3},
                                                      {0, 2, 4},
                                                      {0, 3, 4},
                                                      {1, 2, 3},
                                                      {1, 2, 4},
                                                      {1, 3, 4},
                                                      {2, 3, 4}}};

cplx det3(const std::array<cplx, 3>& a, const std::array<cplx, 3>& b,
          const std::array<cplx, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::array<cplx, 3> normalize_row(std::array<cplx, 3> r) {
    double n = std::sqrt(std::norm(r[0]) + std::norm(r[1]) + std::norm(r[2]));
    if (n == 0.0) throw std::invalid_argument("LineConfig5: zero linear form");
    for (auto& c : r) c /= n;
    return r;
}

double halton(std::uint64_t i, int base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * double(i % base);
        i /= base;
    }
    return r;
}

double third_over_first(const LineConfig5& cfg, const std::array<cplx, 3>& z) {
    std::array<double, 5> m;
    for (int i = 0; i < 5; ++i) {
        cplx v = cfg.forms[i][0] * z[0] + cfg.forms[i][1] * z[1] + cfg.forms[i][2] * z[2];
        m[i] = std::abs(v);
    }
    std::sort(m.begin(), m.end(), std::greater<double>());
    if (m[0] == 0.0) throw std::domain_error("epsilon_for_config: degenerate sample");
    return m[2] / m[0];
}

}  // namespace

LineConfig5::LineConfig5(std::array<std::array<cplx, 3>, 5> f) : forms(f) {
    for (const auto& t : kTriples) {
        cplx d = det3(normalize_row(forms[t[0]]), normalize_row(forms[t[1]]),
                      normalize_row(forms[t[2]]));
        if (std::abs(d) <= 1e-9)
            throw std::domain_error("LineConfig5: triple point in the configuration");
    }
}

ProjPoint embed(const LineConfig5& config, const ProjPoint& z) {
    if (z.coords.size() != 3) throw std::invalid_argument("embed: expects a point of P^2");
    std::vector<cplx> image(5);
    double m = 0.0;
    for (int i = 0; i < 5; ++i) {
        image[i] = config.forms[i][0] * z.coords[0] + config.forms[i][1] * z.coords[1] +
                   config.forms[i][2] * z.coords[2];
        m = std::max(m, std::abs(image[i]));
    }
    if (m <= 1e-9) throw std::domain_error("embed: near-zero image (general-position failure)");
    return ProjPoint::from_unnormalized(std::move(image));
}

ProjPoint power_map(int n, const ProjPoint& z) {
    if (n < 1) throw std::invalid_argument("power_map: n >= 1 required");
    std::vector<cplx> v(z.coords.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::pow(z.coords[i], n);
    return ProjPoint::from_unnormalized(std::move(v));
}

MembershipResult polyhedron_membership(double epsilon, const ProjPoint& z) {
    if (z.coords.size() != 5)
        throw std::invalid_argument("polyhedron_membership: expects a point of P^4");
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::invalid_argument("polyhedron_membership: epsilon in (0,1] required");
    std::array<double, 5> m;
    double sup = 0.0;
    for (int i = 0; i < 5; ++i) {
        m[i] = std::abs(z.coords[i]);
        sup = std::max(sup, m[i]);
    }
    MembershipResult res;
    res.margin = std::numeric_limits<double>::infinity();
    for (const auto& t : kTriples) {
        double tmax = std::max({m[t[0]], m[t[1]], m[t[2]]});
        double margin = tmax - epsilon * sup;
        if (margin < res.margin) {
            res.margin = margin;
            res.worst_triple = t;
        }
    }
    res.member = res.margin >= 0.0;
    return res;
}

std::vector<std::array<int, 3>> face_decomposition(const ProjPoint& z, double tol) {
    MembershipResult mem = polyhedron_membership(1.0, z);
    if (mem.margin < -tol)
        throw std::domain_error("face_decomposition: point not in the polyhedron X_1");
    double sup = 0.0;
    for (const auto& c : z.coords) sup = std::max(sup, std::abs(c));
    std::vector<std::array<int, 3>> faces;
    for (const auto& t : kTriples) {
        bool all = true;
        for (int i : t)
            if (std::abs(z.coords[i]) < sup - tol) all = false;
        if (all) faces.push_back(t);
    }
    return faces;
}

EpsilonEstimate epsilon_for_config(const LineConfig5& config, int sample_budget) {
    double best = std::numeric_limits<double>::infinity();
    // quasi-random sweep of P^2, cycling through the three affine charts
    for (int i = 0; i < sample_budget; ++i) {
        double u = 2.0 * halton(i + 1, 2) - 1.0;
        double v = 2.0 * halton(i + 1, 3) - 1.0;
        double s = 2.0 * halton(i + 1, 5) - 1.0;
        double t = 2.0 * halton(i + 1, 7) - 1.0;
        std::array<cplx, 3> z;
        int chart = i % 3;
        z[chart] = cplx(1.0, 0.0);
        z[(chart + 1) % 3] = cplx(u, v);
        z[(chart + 2) % 3] = cplx(s, t);
        best = std::min(best, third_over_first(config, z));
    }
    // refinement rings around the 10 double points, where the min is attained
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            const auto& a = config.forms[i];
            const auto& b = config.forms[j];
            std::array<cplx, 3> p = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                     a[0] * b[1] - a[1] * b[0]};
            double pn = std::sqrt(std::norm(p[0]) + std::norm(p[1]) + std::norm(p[2]));
            for (auto& c : p) c /= pn;
            best = std::min(best, third_over_first(config, p));
            for (int k = 1; k <= 6; ++k) {
                double radius = std::pow(10.0, -k);
                for (int m = 0; m < 32; ++m) {
                    double u = halton(32 * k + m + 1, 2), v = halton(32 * k + m + 1, 3);
                    double w = halton(32 * k + m + 1, 5), x = halton(32 * k + m + 1, 7);
                    std::array<cplx, 3> q = p;
                    q[0] += radius * cplx(2 * u - 1, 2 * v - 1);
                    q[1] += radius * cplx(2 * w - 1, 2 * x - 1);
                    q[2] += radius * cplx(2 * u - 1, 1 - 2 * x);
                    best = std::min(best, third_over_first(config, q));
                }
            }
        }
    if (best < 1e-9)
        throw std::domain_error("epsilon_for_config: configuration nearly violates general position");
    return EpsilonEstimate{best, best < 1e-3};
}

ProjPoint random_proj_point(std::size_t dim, std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 gen(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<cplx> v(dim + 1);
    for (auto& c : v) c = cplx(nd(gen), nd(gen));
    return ProjPoint::from_unnormalized(std::move(v));
}

int power_preimage_identity_check(double epsilon, int n, int samples, std::uint64_t seed) {
    if (!(epsilon > 0.0) || epsilon >= 1.0)
        throw std::invalid_argument("power_preimage_identity_check: epsilon in (0,1) required");
    if (n < 1) throw std::invalid_argument("power_preimage_identity_check: n >= 1 required");
    double eps_root = std::pow(epsilon, 1.0 / n);
    int discrepancies = 0;
    for (int i = 0; i < samples; ++i) {
        ProjPoint z = random_proj_point(4, seed, std::uint64_t(i));
        bool lhs = polyhedron_membership(epsilon, power_map(n, z)).member;
        bool rhs = polyhedron_membership(eps_root, z).member;
        if (lhs != rhs) ++discrepancies;
    }
    return discrepancies;
}

}  // namespace geolab
