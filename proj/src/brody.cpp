#include "geolab/brody.hpp"

#include <cmath>
#include <stdexcept>

namespace geolab {

namespace {
constexpr int kCoarseR = 64;
constexpr int kCoarseTheta = 64;
constexpr int kRefineRounds = 40;
constexpr int kSupGridR = 128;
constexpr int kSupGridTheta = 64;

struct Best {
    cplx z{0.0, 0.0};
    double value = -1.0;

    void consider(cplx cand, double v) {
        if (v > value * (1.0 + 1e-14) + 1e-300) {
            z = cand;
            value = v;
            return;
        }
        // tie: prefer smaller |z|, then smaller arg
        if (v >= value * (1.0 - 1e-14)) {
            double az = std::abs(cand), bz = std::abs(z);
            if (az < bz - 1e-15 ||
                (std::abs(az - bz) <= 1e-15 && std::arg(cand) < std::arg(z))) {
                z = cand;
                value = std::max(value, v);
            }
        }
    }
};
}  // namespace

std::pair<cplx, double> maximize_on_disc(const std::function<double(cplx)>& objective,
                                         double radius) {
    Best best;
    best.consider(cplx(0.0, 0.0), objective(cplx(0.0, 0.0)));
    for (int i = 1; i <= kCoarseR; ++i) {
        double r = radius * (double(i) - 0.5) / kCoarseR;
        for (int j = 0; j < kCoarseTheta; ++j) {
            double th = 2.0 * M_PI * double(j) / kCoarseTheta;
            cplx z = std::polar(r, th);
            best.consider(z, objective(z));
        }
    }
    double h = radius / kCoarseR;
    for (int round = 0; round < kRefineRounds; ++round) {
        cplx c = best.z;
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                if (dx == 0 && dy == 0) continue;
                cplx z = c + cplx(dx * h, dy * h);
                if (std::abs(z) >= radius) continue;
                best.consider(z, objective(z));
            }
        h /= 3.0;
    }
    return {best.z, best.value};
}

std::pair<cplx, double> extremal_point(const PolyMap& f) {
    double rho = f.domain_radius;
    auto objective = [&](cplx z) { return (rho - std::abs(z)) * deriv_norm_at(f, z); };
    auto [a, value] = maximize_on_disc(objective, rho);
    if (value <= 1e-14)
        throw std::domain_error("extremal_point: constant map (derivative vanishes)");
    return {a, value};
}

std::pair<PolyMap, BrodyReport> brody_step(const PolyMap& f) {
    auto [a, value] = extremal_point(f);
    double fprime = deriv_norm_at(f, a);
    double delta = f.domain_radius - std::abs(a);
    double scale = 1.0 / fprime;
    double R = delta * fprime / 2.0;
    PolyMap g = reparametrize(f, AffineReparam{a, scale}, R);

    BrodyReport rep;
    rep.basepoint = a;
    rep.scale = scale;
    rep.rescaled_domain_radius = R;
    rep.deriv_at_zero = deriv_norm_at(g, 0.0);
    double sup = 0.0;
    for (int i = 0; i <= kSupGridR; ++i) {
        double r = R * double(i) / kSupGridR;
        for (int j = 0; j < kSupGridTheta; ++j) {
            double th = 2.0 * M_PI * double(j) / kSupGridTheta;
            sup = std::max(sup, deriv_norm_at(g, std::polar(r, th)));
            if (i == 0) break;
        }
    }
    rep.sup_deriv_on_rescaled = sup;
    return {std::move(g), rep};
}

BrodySequenceResult brody_sequence(const std::vector<PolyMap>& f_seq) {
    BrodySequenceResult out;
    for (std::size_t n = 0; n < f_seq.size(); ++n) {
        try {
            auto [g, rep] = brody_step(f_seq[n]);
            out.rescaled.push_back(std::move(g));
            out.reports.push_back(rep);
        } catch (const std::domain_error&) {
            throw std::domain_error("brody_sequence: constant map at index " + std::to_string(n));
        }
    }
    // Cauchy proxy: sup over a fixed compact grid of the FS distance between
    // consecutive rescaled maps (grid radius capped by both domains).
    for (std::size_t n = 0; n + 1 < out.rescaled.size(); ++n) {
        const PolyMap& g1 = out.rescaled[n];
        const PolyMap& g2 = out.rescaled[n + 1];
        double gr = std::min({1.0, g1.domain_radius, g2.domain_radius});
        double sup = 0.0;
        for (int i = 0; i <= 16; ++i) {
            double r = gr * double(i) / 16;
            for (int j = 0; j < 32; ++j) {
                cplx z = std::polar(r, 2.0 * M_PI * double(j) / 32);
                sup = std::max(sup, fs_distance(holomap_eval(g1, z), holomap_eval(g2, z)));
                if (i == 0) break;
            }
        }
        out.cauchy_defects.push_back(sup);
    }
    return out;
}

}  // namespace geolab
