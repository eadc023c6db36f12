#ifndef GEOLAB_POLY_HPP
#define GEOLAB_POLY_HPP

#include <vector>

#include "geolab/complexgeom.hpp"

namespace geolab {

/// Univariate complex polynomial, coefficients low degree first.
using Poly = std::vector<cplx>;

cplx poly_eval(const Poly& p, cplx z);
Poly poly_derivative(const Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, cplx s);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, int n);

/// p(a + rho*z), exact at the coefficient level.
Poly poly_compose_affine(const Poly& p, cplx a, cplx rho);

/// Drop trailing coefficients below rel_tol * max|coeff|.
Poly poly_trim(const Poly& p, double rel_tol = 1e-13);

int poly_degree(const Poly& p, double rel_tol = 1e-13);

/// All complex roots via companion-matrix eigenvalues (after trimming).
std::vector<cplx> poly_roots(const Poly& p, double rel_tol = 1e-13);

}  // namespace geolab

#endif
