#ifndef GEOLAB_LELONG_HPP
#define GEOLAB_LELONG_HPP

#include <vector>

#include "geolab/poly.hpp"

namespace geolab {

/// Parametrized analytic curve into C^n, restricted to the ball B(0, eps).
/// The parametrization must exit the ball before the parameter disc
/// boundary (properness surrogate, checked at construction).
struct BallCurve {
    std::vector<Poly> components;  // affine coordinates, not projective
    double ball_radius = 1.0;      // eps
    double param_radius = 1.0;
    bool through_origin = false;

    BallCurve(std::vector<Poly> comps, double eps, double param_radius);

    double image_norm(cplx z) const;     // |gamma(z)|
    double area_density(cplx z) const;   // sum |gamma_k'(z)|^2
};

/// Euclidean area (with parametrized multiplicity) of the piece of the curve
/// inside B(0, r), by per-ray crossing detection plus Gauss-Legendre in t.
double area_in_ball(const BallCurve& c, double r, int ntheta = 512);

/// a(r)/r^2 along the given increasing radii.
std::vector<double> monotonicity_profile(const BallCurve& c, const std::vector<double>& radii,
                                         int ntheta = 512);

/// area(C)/(pi eps^2); must be >= 1 for curves through the origin.
double lelong_bound_check(const BallCurve& c, int ntheta = 512);

}  // namespace geolab

#endif
