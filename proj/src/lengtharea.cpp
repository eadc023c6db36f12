#include "geolab/lengtharea.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace geolab {

namespace {

// cumulative integral of uniformly sampled values, Simpson on even prefixes,
// quadratic end-correction on odd ones
std::vector<double> cumulative_simpson(const std::vector<double>& f, double h) {
    std::vector<double> A(f.size(), 0.0);
    if (f.size() < 2) return A;
    if (f.size() == 2) {
        A[1] = h * 0.5 * (f[0] + f[1]);
        return A;
    }
    A[1] = h / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
    for (std::size_t k = 2; k < f.size(); ++k) {
        if (k % 2 == 0)
            A[k] = A[k - 2] + h / 3.0 * (f[k - 2] + 4.0 * f[k - 1] + f[k]);
        else
            A[k] = A[k - 1] + h / 12.0 * (5.0 * f[k] + 8.0 * f[k - 1] - f[k - 2]);
    }
    return A;
}

struct ThetaRow {
    std::vector<double> lambda;
    double l = 0.0;       // int lambda r dtheta
    double aprime = 0.0;  // int lambda^2 r dtheta
};

ThetaRow theta_row(const PolyMap& f, double r, int ntheta) {
    ThetaRow row;
    row.lambda.resize(ntheta);
    double dtheta = 2.0 * M_PI / ntheta;
    for (int j = 0; j < ntheta; ++j) {
        double lam = deriv_norm_at(f, std::polar(r, dtheta * j));
        row.lambda[j] = lam;
        row.l += lam;
        row.aprime += lam * lam;
    }
    row.l *= r * dtheta;
    row.aprime *= r * dtheta;
    return row;
}

std::vector<double> segment_boundaries(double rho_max) {
    std::vector<double> b{0.0};
    double r = std::min(1.0, rho_max);
    b.push_back(r);
    while (r < rho_max) {
        r = std::min(2.0 * r, rho_max);
        b.push_back(r);
    }
    return b;
}

RadialProfile profile_over_segments(const PolyMap& f, const std::vector<double>& bounds,
                                    int nr_per_segment, int ntheta) {
    if (nr_per_segment < 16 || ntheta < 32)
        throw std::invalid_argument("radial_profile: need nr >= 16, ntheta >= 32");
    RadialProfile p;
    p.thetas.resize(ntheta);
    for (int j = 0; j < ntheta; ++j) p.thetas[j] = 2.0 * M_PI * j / ntheta;

    double a_acc = 0.0;
    for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
        double r0 = bounds[s], r1 = bounds[s + 1];
        double h = (r1 - r0) / nr_per_segment;
        std::vector<double> gvals(nr_per_segment + 1);
        std::vector<ThetaRow> rows(nr_per_segment + 1);
        for (int i = 0; i <= nr_per_segment; ++i) {
            double r = r0 + h * i;
            rows[i] = theta_row(f, r, ntheta);
            gvals[i] = rows[i].aprime;
        }
        auto A = cumulative_simpson(gvals, h);
        for (int i = 1; i <= nr_per_segment; ++i) {
            p.radii.push_back(r0 + h * i);
            p.lambda.push_back(std::move(rows[i].lambda));
            p.l_of_r.push_back(rows[i].l);
            p.aprime_of_r.push_back(rows[i].aprime);
            p.a_of_r.push_back(a_acc + A[i]);
        }
        a_acc += A[nr_per_segment];
    }
    return p;
}

}  // namespace

RadialProfile radial_profile(const PolyMap& f, int nr, int ntheta) {
    return profile_over_segments(f, {0.0, f.domain_radius}, nr, ntheta);
}

RadialProfile graded_profile(const PolyMap& f, double rho_max, int nr_per_segment,
                             int ntheta) {
    if (rho_max > f.domain_radius * (1.0 + 1e-12))
        throw std::domain_error("graded_profile: rho_max exceeds domain radius");
    return profile_over_segments(f, segment_boundaries(rho_max), nr_per_segment, ntheta);
}

double length_area_inequality_check(const RadialProfile& p) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < p.radii.size(); ++i) {
        double l2 = p.l_of_r[i] * p.l_of_r[i];
        double rhs = 2.0 * M_PI * p.radii[i] * p.aprime_of_r[i];
        worst = std::max(worst, (l2 - rhs) / std::max(l2, 1e-30));
    }
    return worst;
}

AhlforsRadii select_ahlfors_radii(const PolyMap& f, double rho_max, int count,
                                  int nr_per_segment, int ntheta) {
    if (rho_max < 2.0) throw std::invalid_argument("select_ahlfors_radii: rho_max too small");
    RadialProfile p = graded_profile(f, rho_max, nr_per_segment, ntheta);

    double a1 = -1.0;
    for (std::size_t i = 0; i < p.radii.size(); ++i)
        if (std::abs(p.radii[i] - 1.0) < 1e-12) a1 = p.a_of_r[i];
    if (a1 <= 1e-12)
        throw std::domain_error("select_ahlfors_radii: a(1) vanishes (constant on unit disc)");

    AhlforsRadii out;
    out.integral_bound = 1.0 / a1;
    // trapezoid of (l/a)^2 / (2 pi r) on the grid restricted to r >= 1
    double prev_r = 0.0, prev_v = 0.0;
    bool started = false;
    for (std::size_t i = 0; i < p.radii.size(); ++i) {
        if (p.radii[i] < 1.0 - 1e-12) continue;
        double ratio = p.l_of_r[i] / p.a_of_r[i];
        double v = ratio * ratio / (2.0 * M_PI * p.radii[i]);
        if (started) out.integral_value += 0.5 * (v + prev_v) * (p.radii[i] - prev_r);
        prev_r = p.radii[i];
        prev_v = v;
        started = true;
    }

    // greedy minimizers on expanding windows [2^k, 2^(k+1)]
    double lo = 1.0;
    double prev_ratio = std::numeric_limits<double>::infinity();
    while (int(out.radii.size()) < count && lo < rho_max) {
        double hi = std::min(2.0 * lo, rho_max);
        double best_r = -1.0, best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < p.radii.size(); ++i) {
            if (p.radii[i] < lo || p.radii[i] > hi) continue;
            double ratio = p.l_of_r[i] / std::max(p.a_of_r[i], 1e-300);
            if (ratio < best_ratio) {
                best_ratio = ratio;
                best_r = p.radii[i];
            }
        }
        if (best_r > 0.0 && best_ratio < prev_ratio) {
            out.radii.push_back(best_r);
            out.ratios.push_back(best_ratio);
            prev_ratio = best_ratio;
        }
        lo = hi;
    }
    return out;
}

double isoperimetric_ratio(const PolyMap& f, int nr, int ntheta) {
    RadialProfile p = radial_profile(f, nr, ntheta);
    double l = p.l_of_r.back(), a = p.a_of_r.back();
    if (l <= 1e-14) {
        if (a <= 1e-14) throw std::domain_error("isoperimetric_ratio: constant map");
        return std::numeric_limits<double>::infinity();
    }
    return a / l;
}

TotalAreaEstimate total_area_estimate(const PolyMap& f, double rho_max, int nr_per_segment,
                                      int ntheta) {
    RadialProfile p = graded_profile(f, rho_max, nr_per_segment, ntheta);
    TotalAreaEstimate out;
    for (double b : segment_boundaries(rho_max)) {
        if (b == 0.0) continue;
        for (std::size_t i = 0; i < p.radii.size(); ++i)
            if (std::abs(p.radii[i] - b) < 1e-12 * std::max(1.0, b)) {
                out.rho_ladder.push_back(b);
                out.area_at_rho.push_back(p.a_of_r[i]);
            }
    }
    out.estimate = out.area_at_rho.back();
    return out;
}

EmpiricalCurrent empirical_current(const PolyMap& f, const std::vector<Cell>& partition,
                                   int nr_per_segment, int ntheta) {
    if (partition.empty()) throw std::invalid_argument("empirical_current: empty partition");
    auto bounds = segment_boundaries(f.domain_radius);
    std::vector<double> weights(partition.size() + 1, 0.0);
    double total = 0.0;
    double dtheta = 2.0 * M_PI / ntheta;
    for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
        double h = (bounds[s + 1] - bounds[s]) / nr_per_segment;
        for (int i = 0; i < nr_per_segment; ++i) {
            double r = bounds[s] + h * (i + 0.5);
            for (int j = 0; j < ntheta; ++j) {
                cplx z = std::polar(r, dtheta * (j + 0.5));
                double lam = deriv_norm_at(f, z);
                double w = lam * lam * r * h * dtheta;
                if (w == 0.0) continue;
                total += w;
                ProjPoint q = holomap_eval(f, z);
                std::size_t hit = partition.size();  // complement
                for (std::size_t c = 0; c < partition.size(); ++c)
                    if (partition[c].contains(q)) {
                        hit = c;
                        break;
                    }
                weights[hit] += w;
            }
        }
    }
    if (total <= 0.0) throw std::domain_error("empirical_current: zero-area disc");
    EmpiricalCurrent out;
    for (const auto& c : partition) out.cell_ids.push_back(c.id);
    out.cell_ids.push_back("complement");
    for (double w : weights) out.masses.push_back(w / total);
    out.a_n = total;
    out.l_n = theta_row(f, f.domain_radius, std::max(ntheta, 256)).l;
    return out;
}

double RealPoly2::eval(double x, double y) const {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        double row = 0.0;
        for (std::size_t j = c[i].size(); j-- > 0;) row = row * y + c[i][j];
        acc = acc * x + row;
    }
    return acc;
}

RealPoly2 RealPoly2::ddx() const {
    if (c.size() <= 1) return RealPoly2{{{0.0}}};
    RealPoly2 d;
    d.c.assign(c.begin() + 1, c.end());
    for (std::size_t i = 0; i < d.c.size(); ++i)
        for (auto& v : d.c[i]) v *= double(i + 1);
    return d;
}

RealPoly2 RealPoly2::ddy() const {
    RealPoly2 d;
    d.c.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].size() <= 1) {
            d.c[i] = {0.0};
            continue;
        }
        d.c[i].assign(c[i].begin() + 1, c[i].end());
        for (std::size_t j = 0; j < d.c[i].size(); ++j) d.c[i][j] *= double(j + 1);
    }
    return d;
}

ClosednessDefect closedness_defect(const PolyMap& f, const ChartOneForm& beta,
                                   double area_override, int nr, int ntheta) {
    if (f.components.size() != 2)
        throw std::invalid_argument("closedness_defect: expects a map into P^1");
    const Poly& F0 = f.components[0];
    const Poly& F1 = f.components[1];
    Poly dF0 = poly_derivative(F0), dF1 = poly_derivative(F1);

    auto chart = [&](cplx z, cplx& w, cplx& wp) {
        cplx a = poly_eval(F0, z), b = poly_eval(F1, z);
        if (std::abs(a) <= 1e-9 * (std::abs(a) + std::abs(b)))
            throw std::domain_error("closedness_defect: image leaves the affine chart");
        w = b / a;
        wp = (poly_eval(dF1, z) * a - b * poly_eval(dF0, z)) / (a * a);
    };

    double rho = f.domain_radius;
    // precondition sweep including the disc center (the quadrature below
    // never samples r = 0, so a chart escape there would go unnoticed)
    for (int i = 0; i <= 16; ++i)
        for (int j = 0; j < 16; ++j) {
            cplx z = std::polar(rho * i / 16.0, 2.0 * M_PI * j / 16.0), w, wp;
            chart(z, w, wp);
        }

    // boundary integral of f* beta, trapezoid (periodic, spectrally accurate)
    int nb = std::max(ntheta, 512);
    double boundary = 0.0;
    for (int j = 0; j < nb; ++j) {
        double t = 2.0 * M_PI * j / nb;
        cplx z = std::polar(rho, t), w, wp;
        chart(z, w, wp);
        cplx dwdt = wp * cplx(0.0, 1.0) * z;
        boundary += beta.P.eval(w.real(), w.imag()) * dwdt.real() +
                    beta.Q.eval(w.real(), w.imag()) * dwdt.imag();
    }
    boundary *= 2.0 * M_PI / nb;

    // area integral of f*(d beta) = (Q_x - P_y)(w) |w'|^2 dA
    RealPoly2 curlQ = beta.Q.ddx(), curlP = beta.P.ddy();
    int nrr = nr + (nr % 2);
    double dtheta = 2.0 * M_PI / ntheta;
    std::vector<double> g(nrr + 1, 0.0);
    double h = rho / nrr;
    for (int i = 1; i <= nrr; ++i) {
        double r = h * i, acc = 0.0;
        for (int j = 0; j < ntheta; ++j) {
            cplx z = std::polar(r, dtheta * j), w, wp;
            chart(z, w, wp);
            acc += (curlQ.eval(w.real(), w.imag()) - curlP.eval(w.real(), w.imag())) *
                   std::norm(wp);
        }
        g[i] = acc * dtheta * r;
    }
    double area_int = 0.0;
    for (int i = 0; i + 2 <= nrr; i += 2)
        area_int += h / 3.0 * (g[i] + 4.0 * g[i + 1] + g[i + 2]);

    double a = area_override;
    if (a <= 0.0) a = radial_profile(f, std::max(nr, 64), std::max(ntheta, 64)).a_of_r.back();

    ClosednessDefect out;
    out.stokes_residual = std::abs(area_int - boundary);
    out.normalized_defect = std::abs(area_int) / a;
    return out;
}

}  // namespace geolab
