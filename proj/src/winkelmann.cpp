#include "geolab/winkelmann.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "geolab/brody.hpp"

namespace geolab {

namespace {

bool looks_rational(double lambda, long max_denominator, double tol) {
    double x = lambda;
    long p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(x);
        long p = long(a) * p_prev + p_prev2;
        long q = long(a) * q_prev + q_prev2;
        if (q_prev != 0 && (q > max_denominator || q < 0)) return false;
        if (q != 0 && std::abs(lambda - double(p) / double(q)) < tol) return true;
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
        double frac = x - a;
        if (frac < 1e-15) return q_prev <= max_denominator;
        x = 1.0 / frac;
    }
    return false;
}

double reduce_centered(double x) { return x - std::round(x); }

}  // namespace

double golden_slope() { return (std::sqrt(5.0) - 1.0) / 2.0; }

LineDiscScenario::LineDiscScenario(double lambda, int n_, cplx q1, cplx q2)
    : slope(lambda), n(n_), offset1(q1), offset2(q2) {
    if (n < 1) throw std::invalid_argument("LineDiscScenario: n >= 1 required");
    if (looks_rational(lambda, 1000000, 1e-14))
        throw std::domain_error("LineDiscScenario: slope is rational to working precision");
}

TorusReduction LineDiscScenario::at(cplx z) const {
    return torus_reduce(offset1 + double(n) * z, offset2 + slope * double(n) * z);
}

double LineDiscScenario::flat_deriv_norm() const {
    return double(n) * std::sqrt(1.0 + slope * slope);
}

double lift_deriv_norm(const LineDiscScenario& s, cplx z) {
    double flat = s.flat_deriv_norm();
    if (!s.fs_term_enabled) return flat;
    cplx z1 = s.offset1 + double(s.n) * z;
    cplx z2 = s.offset2 + s.slope * double(s.n) * z;
    cplx zeta1(reduce_centered(z1.real()), reduce_centered(z1.imag()));
    cplx zeta2(reduce_centered(z2.real()), reduce_centered(z2.imag()));
    double d2 = std::norm(zeta1) + std::norm(zeta2);
    if (d2 > s.chart_radius * s.chart_radius) return flat;
    // lambda*zeta1 - zeta2 is constant along the disc for a fixed translate;
    // zero exactly when the disc runs through p with the line's direction
    double num = double(s.n) * std::abs(s.slope * zeta1 - zeta2);
    double fs = (num == 0.0) ? 0.0 : num / std::max(d2, 1e-300);
    return std::hypot(flat, fs);
}

EquidistributionReport equidistribution_report(const LineDiscScenario& s, int k,
                                               long samples) {
    if (k < 2) throw std::invalid_argument("equidistribution_report: k >= 2 required");
    EquidistributionReport rep;
    rep.k = k;
    rep.masses.assign(std::size_t(k) * k, 0.0);
    // flat density is constant, and both Re coordinates depend only on
    // t = Re z; the box masses marginalize to a chord-weighted 1-d integral
    double total = 0.0;
    double h = 2.0 / double(samples);
    for (long i = 0; i < samples; ++i) {
        double t = -1.0 + h * (double(i) + 0.5);
        double chord = 2.0 * std::sqrt(std::max(0.0, 1.0 - t * t));
        double x1 = s.offset1.real() + double(s.n) * t;
        double x2 = s.offset2.real() + s.slope * double(s.n) * t;
        x1 -= std::floor(x1);
        x2 -= std::floor(x2);
        int b1 = std::min(k - 1, int(x1 * k));
        int b2 = std::min(k - 1, int(x2 * k));
        rep.masses[std::size_t(b1) * k + b2] += chord;
        total += chord;
    }
    double uniform = 1.0 / double(k * k);
    for (auto& m : rep.masses) {
        m /= total;
        rep.max_relative_deviation =
            std::max(rep.max_relative_deviation, std::abs(m - uniform) / uniform);
    }
    return rep;
}

namespace {

// local 9-point stencil refinement around a candidate spike
std::pair<cplx, double> refine_around(const std::function<double(cplx)>& objective, cplx z0,
                                      double h0, int rounds, double radius) {
    cplx best_z = z0;
    double best_v = objective(z0);
    double h = h0;
    for (int round = 0; round < rounds; ++round) {
        cplx c = best_z;
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                if (dx == 0 && dy == 0) continue;
                cplx z = c + cplx(dx * h, dy * h);
                if (std::abs(z) >= radius) continue;
                double v = objective(z);
                if (v > best_v) {
                    best_v = v;
                    best_z = z;
                }
            }
        h /= 3.0;
    }
    return {best_z, best_v};
}

}  // namespace

std::vector<BrodyLocusEntry> brody_locus_report(double slope, cplx q1, cplx q2,
                                                const std::vector<int>& n_ladder) {
    std::vector<BrodyLocusEntry> out;
    for (int n : n_ladder) {
        LineDiscScenario s(slope, n, q1, q2);
        auto objective = [&](cplx z) { return (1.0 - std::abs(z)) * lift_deriv_norm(s, z); };

        auto [best_z, best_v] = maximize_on_disc(objective, 1.0);
        // the FS spikes live near preimages of the lattice translates and are
        // far narrower than the coarse grid; rank them by the closed-form
        // peak height (1-|z*|) * n/|c| and refine the strongest ones
        struct Candidate {
            cplx z;
            double estimate;
        };
        std::vector<Candidate> cands;
        double flat = s.flat_deriv_norm();
        for (int a = -n; a <= n; ++a)
            for (int b = -n; b <= n; ++b) {
                cplx m{double(a), double(b)};
                cplx z_star = (m - q1) / double(n);
                double az = std::abs(z_star);
                if (az >= 1.0) continue;
                cplx z2 = q2 + slope * (m - q1);
                double miss = std::hypot(reduce_centered(z2.real()), reduce_centered(z2.imag()));
                double peak = flat;
                if (miss <= s.chart_radius)
                    peak = std::hypot(flat, double(n) / std::max(miss, 1e-12));
                cands.push_back({z_star, (1.0 - az) * peak});
            }
        std::partial_sort(cands.begin(), cands.begin() + std::min<std::size_t>(64, cands.size()),
                          cands.end(),
                          [](const Candidate& x, const Candidate& y) {
                              return x.estimate > y.estimate;
                          });
        for (std::size_t i = 0; i < std::min<std::size_t>(64, cands.size()); ++i) {
            auto [z, v] = refine_around(objective, cands[i].z, 0.25 / double(n), 30, 1.0);
            if (v > best_v) {
                best_v = v;
                best_z = z;
            }
        }

        LineDiscScenario control = s;
        control.fs_term_enabled = false;
        auto control_obj = [&](cplx z) {
            return (1.0 - std::abs(z)) * lift_deriv_norm(control, z);
        };
        auto [cz, cv] = maximize_on_disc(control_obj, 1.0);
        (void)cv;

        BrodyLocusEntry e;
        e.n = n;
        e.argmax = best_z;
        e.dist_to_p = s.at(best_z).dist_to_origin;
        e.lift_norm = lift_deriv_norm(s, best_z);
        e.control_dist = s.at(cz).dist_to_origin;
        out.push_back(e);
    }
    return out;
}

}  // namespace geolab
