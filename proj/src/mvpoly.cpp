#include "geolab/mvpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace geolab {

MPoly MPoly::constant(std::size_t nvars, cplx c) {
    MPoly p{nvars, {}};
    if (c != cplx(0.0, 0.0)) p.terms[std::vector<int>(nvars, 0)] = c;
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
    MPoly p{nvars, {}};
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.terms[e] = cplx(1.0, 0.0);
    return p;
}

MPoly MPoly::linear_form(const std::vector<cplx>& coeffs) {
    MPoly p{coeffs.size(), {}};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == cplx(0.0, 0.0)) continue;
        std::vector<int> e(coeffs.size(), 0);
        e[i] = 1;
        p.terms[e] = coeffs[i];
    }
    return p;
}

void MPoly::add_term(std::vector<int> exps, cplx c) {
    if (exps.size() != nvars) throw std::invalid_argument("MPoly: exponent arity mismatch");
    terms[std::move(exps)] += c;
}

cplx MPoly::eval(const std::vector<cplx>& z) const {
    if (z.size() != nvars) throw std::invalid_argument("MPoly::eval: arity mismatch");
    cplx acc(0.0, 0.0);
    for (const auto& [e, c] : terms) {
        cplx m = c;
        for (std::size_t i = 0; i < nvars; ++i)
            for (int k = 0; k < e[i]; ++k) m *= z[i];
        acc += m;
    }
    return acc;
}

bool MPoly::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms) {
        if (std::abs(c) == 0.0) continue;
        if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
    }
    return true;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) {
        if (std::abs(c) == 0.0) continue;
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    }
    return d;
}

double MPoly::coeff_scale() const {
    double s = 0.0;
    for (const auto& [e, c] : terms) s = std::max(s, std::abs(c));
    return s;
}

MPoly mv_add(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.terms) r.terms[e] += c;
    return r;
}

MPoly mv_scale(const MPoly& a, cplx s) {
    MPoly r = a;
    for (auto& [e, c] : r.terms) c *= s;
    return r;
}

MPoly mv_sub(const MPoly& a, const MPoly& b) { return mv_add(a, mv_scale(b, cplx(-1.0, 0.0))); }

MPoly mv_mul(const MPoly& a, const MPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("mv_mul: arity mismatch");
    MPoly r = MPoly::zero(a.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(a.nvars);
            for (std::size_t i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            r.terms[e] += ca * cb;
        }
    return r;
}

MPoly mv_pow(const MPoly& a, int n) {
    MPoly r = MPoly::constant(a.nvars, cplx(1.0, 0.0));
    for (int k = 0; k < n; ++k) r = mv_mul(r, a);
    return r;
}

std::vector<cplx> mv_restrict_to_line(const MPoly& p, const std::vector<cplx>& b0,
                                      const std::vector<cplx>& b1) {
    int d = p.total_degree();
    if (d < 0) return {cplx(0.0, 0.0)};
    // each variable becomes the binomial b0[i]*t0 + b1[i]*t1; expand products
    std::vector<cplx> out(d + 1, cplx(0.0, 0.0));
    for (const auto& [e, c] : p.terms) {
        if (std::abs(c) == 0.0) continue;
        std::vector<cplx> acc{c};  // coefficients in t1, homogeneous degree implied
        for (std::size_t i = 0; i < p.nvars; ++i)
            for (int k = 0; k < e[i]; ++k) {
                std::vector<cplx> next(acc.size() + 1, cplx(0.0, 0.0));
                for (std::size_t j = 0; j < acc.size(); ++j) {
                    next[j] += acc[j] * b0[i];
                    next[j + 1] += acc[j] * b1[i];
                }
                acc = std::move(next);
            }
        if (int(acc.size()) != d + 1)
            throw std::invalid_argument("mv_restrict_to_line: polynomial not homogeneous");
        for (int j = 0; j <= d; ++j) out[j] += acc[j];
    }
    return out;
}

Poly mv_compose_univariate(const MPoly& p, const std::vector<std::vector<cplx>>& comps) {
    if (comps.size() != p.nvars) throw std::invalid_argument("mv_compose_univariate: arity");
    Poly acc{cplx(0.0, 0.0)};
    for (const auto& [e, c] : p.terms) {
        Poly m{c};
        for (std::size_t i = 0; i < p.nvars; ++i)
            for (int k = 0; k < e[i]; ++k) m = poly_mul(m, comps[i]);
        acc = poly_add(acc, m);
    }
    return acc;
}

}  // namespace geolab
