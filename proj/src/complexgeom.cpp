#include "geolab/complexgeom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geolab {

ProjPoint ProjPoint::from_unnormalized(std::vector<cplx> v) {
    if (v.empty()) throw std::domain_error("ProjPoint: empty coordinate vector");
    std::size_t pivot = 0;
    double best = std::abs(v[0]);
    for (std::size_t i = 1; i < v.size(); ++i) {
        double m = std::abs(v[i]);
        if (m > best) {  // ties keep the lowest index
            best = m;
            pivot = i;
        }
    }
    if (best == 0.0) throw std::domain_error("ProjPoint: zero vector");
    cplx p = v[pivot];
    for (auto& c : v) c /= p;
    v[pivot] = cplx(1.0, 0.0);  // kill roundoff on the pivot
    return ProjPoint{std::move(v)};
}

double fs_deriv_norm(const std::vector<cplx>& F, const std::vector<cplx>& Fp) {
    if (F.size() != Fp.size() || F.empty())
        throw std::domain_error("fs_deriv_norm: size mismatch");
    double n2 = 0.0, d2 = 0.0;
    cplx inner(0.0, 0.0);
    for (std::size_t i = 0; i < F.size(); ++i) {
        n2 += std::norm(F[i]);
        d2 += std::norm(Fp[i]);
        inner += std::conj(F[i]) * Fp[i];
    }
    if (n2 == 0.0) throw std::domain_error("fs_deriv_norm: zero lift vector");
    double num = n2 * d2 - std::norm(inner);
    if (num < 0.0) num = 0.0;  // roundoff in the Cauchy-Schwarz defect
    return std::sqrt(num) / n2;
}

double fs_distance(const ProjPoint& p, const ProjPoint& q) {
    if (p.coords.size() != q.coords.size())
        throw std::domain_error("fs_distance: dimension mismatch");
    double np = 0.0, nq = 0.0;
    cplx inner(0.0, 0.0);
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        np += std::norm(p.coords[i]);
        nq += std::norm(q.coords[i]);
        inner += std::conj(p.coords[i]) * q.coords[i];
    }
    double c = std::abs(inner) / std::sqrt(np * nq);
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

namespace {
double frac01(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f = 0.0;  // guard against floor roundoff at integers
    return f;
}
}  // namespace

TorusReduction torus_reduce(cplx z1, cplx z2) {
    std::array<double, 4> rep = {frac01(z1.real()), frac01(z1.imag()),
                                 frac01(z2.real()), frac01(z2.imag())};
    // distance to the class of 0: min over the 3^4 nearest lattice translates
    double best = std::numeric_limits<double>::infinity();
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int d = -1; d <= 1; ++d) {
                    double dx0 = rep[0] - a, dx1 = rep[1] - b;
                    double dx2 = rep[2] - c, dx3 = rep[3] - d;
                    best = std::min(best, dx0 * dx0 + dx1 * dx1 + dx2 * dx2 + dx3 * dx3);
                }
    return TorusReduction{TorusPoint{rep}, std::sqrt(best)};
}

}  // namespace geolab
