#ifndef GEOLAB_WINKELMANN_HPP
#define GEOLAB_WINKELMANN_HPP

#include <vector>

#include "geolab/complexgeom.hpp"

namespace geolab {

/// Disc z -> (q1 + n z, q2 + lambda n z) along the irrational line
/// L = (z2 = lambda z1) on the square torus, blown up at p = class of 0.
struct LineDiscScenario {
    double slope;        // lambda, irrational
    int n;               // scale
    cplx offset1{0.0, 0.0};
    cplx offset2{0.0, 0.0};
    double chart_radius = 0.2;  // FS term active within this distance of p
    bool fs_term_enabled = true;

    LineDiscScenario(double lambda, int n_, cplx q1 = {}, cplx q2 = {});

    TorusReduction at(cplx z) const;
    double flat_deriv_norm() const;  // n sqrt(1+lambda^2), constant
};

/// Golden-ratio conjugate, the default slope.
double golden_slope();

/// Derivative norm of the lift to the blow-up chart: flat term plus the
/// Fubini-Study term of the direction coordinate w = zeta2/zeta1 in
/// nearest-translate coordinates centered at p.
double lift_deriv_norm(const LineDiscScenario& s, cplx z);

struct EquidistributionReport {
    int k = 0;                       // k x k boxes on (Re z1, Re z2)
    std::vector<double> masses;      // row-major, sum 1
    double max_relative_deviation = 0.0;  // from the uniform mass 1/k^2
};

/// Share of disc area per box of the fundamental domain, marginalized to the
/// (Re z1, Re z2) plane.  The flat density is constant, so masses reduce to
/// a 1-d integral in Re z weighted by the chord length of the disc.
EquidistributionReport equidistribution_report(const LineDiscScenario& s, int k,
                                               long samples = 4000000);

struct BrodyLocusEntry {
    int n = 0;
    cplx argmax;
    double dist_to_p = 0.0;   // torus distance from the image of the argmax to p
    double lift_norm = 0.0;
    double control_dist = 0.0;  // same search with the FS term disabled
};

/// Brody basepoint migration along an n ladder: maximize delta(z) times the
/// lifted derivative norm and report where the maximum sits on the torus.
std::vector<BrodyLocusEntry> brody_locus_report(double slope, cplx q1, cplx q2,
                                                const std::vector<int>& n_ladder);

}  // namespace geolab

#endif
