#ifndef GEOLAB_COMPLEXGEOM_HPP
#define GEOLAB_COMPLEXGEOM_HPP

#include <array>
#include <complex>
#include <vector>

namespace geolab {

using cplx = std::complex<double>;

/// Point of P^n in homogeneous coordinates, kept normalized so that the
/// coordinate of largest modulus equals 1 (ties broken by lowest index).
struct ProjPoint {
    std::vector<cplx> coords;

    static ProjPoint from_unnormalized(std::vector<cplx> v);
    std::size_t dim() const { return coords.size() - 1; }
};

/// Fubini-Study norm of the projectivized derivative of a lift.
/// F is the lift value, Fp its derivative, both in C^{n+1}.
/// Normalization: a projective line has area pi.
double fs_deriv_norm(const std::vector<cplx>& F, const std::vector<cplx>& Fp);

/// Geodesic Fubini-Study distance arccos(|<P,Q>|/(|P||Q|)).
double fs_distance(const ProjPoint& p, const ProjPoint& q);

/// Point of the square torus C^2/(Z+iZ)^2, all four real components in [0,1).
struct TorusPoint {
    std::array<double, 4> rep;  // Re z1, Im z1, Re z2, Im z2
};

struct TorusReduction {
    TorusPoint point;
    double dist_to_origin;  // flat distance from the class of z to the class of 0
};

/// Reduce a pair of complex numbers to the fundamental domain and compute the
/// flat distance to the lattice class of the origin (scan over 81 translates).
TorusReduction torus_reduce(cplx z1, cplx z2);

/// Chart model of the blow-up of C^2 at 0: embedded point is (u, u*w).
/// u = 0 parametrizes the exceptional divisor by the direction coordinate w.
struct BlowupChartPoint {
    cplx u;
    cplx w;
};

}  // namespace geolab

#endif
