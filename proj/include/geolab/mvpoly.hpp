#ifndef GEOLAB_MVPOLY_HPP
#define GEOLAB_MVPOLY_HPP

#include <map>
#include <vector>

#include "geolab/complexgeom.hpp"
#include "geolab/poly.hpp"

namespace geolab {

/// Sparse multivariate complex polynomial; key = exponent vector.
struct MPoly {
    std::size_t nvars = 0;
    std::map<std::vector<int>, cplx> terms;

    static MPoly zero(std::size_t nvars) { return MPoly{nvars, {}}; }
    static MPoly constant(std::size_t nvars, cplx c);
    static MPoly variable(std::size_t nvars, std::size_t i);
    static MPoly linear_form(const std::vector<cplx>& coeffs);

    void add_term(std::vector<int> exps, cplx c);
    cplx eval(const std::vector<cplx>& z) const;
    bool is_homogeneous(int degree) const;
    int total_degree() const;
    double coeff_scale() const;  // max |coefficient|
};

MPoly mv_add(const MPoly& a, const MPoly& b);
MPoly mv_scale(const MPoly& a, cplx s);
MPoly mv_sub(const MPoly& a, const MPoly& b);
MPoly mv_mul(const MPoly& a, const MPoly& b);
MPoly mv_pow(const MPoly& a, int n);

/// Restriction to the projective line t0*b0 + t1*b1: returns the homogeneous
/// bivariate coefficients c[k] of t0^(d-k) t1^k, d = total degree of p.
std::vector<cplx> mv_restrict_to_line(const MPoly& p, const std::vector<cplx>& b0,
                                      const std::vector<cplx>& b1);

/// Substitute each variable z_i by a univariate polynomial comp[i].
Poly mv_compose_univariate(const MPoly& p, const std::vector<std::vector<cplx>>& comps);

}  // namespace geolab

#endif
