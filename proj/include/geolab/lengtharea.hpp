#ifndef GEOLAB_LENGTHAREA_HPP
#define GEOLAB_LENGTHAREA_HPP

#include <functional>
#include <string>
#include <vector>

#include "geolab/holomap.hpp"

namespace geolab {

/// Sampled pullback density lambda(r,theta) = ||f'|| with the derived
/// length and area curves l(r), a(r).  a'(r) is kept as sampled (it feeds
/// the Cauchy-Schwarz check directly, instead of differencing a).
struct RadialProfile {
    std::vector<double> radii;                // increasing, in (0, rho]
    std::vector<double> thetas;               // uniform on [0, 2pi)
    std::vector<std::vector<double>> lambda;  // lambda[ir][itheta]
    std::vector<double> l_of_r;
    std::vector<double> a_of_r;
    std::vector<double> aprime_of_r;
};

/// Uniform radial grid on (0, rho], trapezoid in theta, cumulative Simpson in r.
RadialProfile radial_profile(const PolyMap& f, int nr, int ntheta);

/// Profile on a geometrically graded grid [0,1],[1,2],[2,4],... up to rho_max
/// (each segment gets nr_per_segment uniform points).  Used for large radii.
RadialProfile graded_profile(const PolyMap& f, double rho_max, int nr_per_segment,
                             int ntheta);

/// Max over interior radii of (l^2 - 2 pi r a') / max(l^2, eps).
double length_area_inequality_check(const RadialProfile& p);

struct AhlforsRadii {
    std::vector<double> radii;
    std::vector<double> ratios;     // l/a at the selected radii, strictly decreasing
    double integral_value = 0.0;    // int_1^rho_max (l^2/a^2) dr/(2 pi r)
    double integral_bound = 0.0;    // 1/a(1)
};

AhlforsRadii select_ahlfors_radii(const PolyMap& f, double rho_max, int count,
                                  int nr_per_segment = 256, int ntheta = 256);

/// a(rho)/l(rho); +inf sentinel when the boundary length vanishes but the
/// area does not; error for constant maps.
double isoperimetric_ratio(const PolyMap& f, int nr = 256, int ntheta = 256);

struct TotalAreaEstimate {
    std::vector<double> rho_ladder;
    std::vector<double> area_at_rho;  // nondecreasing
    double estimate = 0.0;            // area at the largest rho
};

TotalAreaEstimate total_area_estimate(const PolyMap& f, double rho_max = 256.0,
                                      int nr_per_segment = 256, int ntheta = 256);

/// A target cell: named membership predicate on projective points.
struct Cell {
    std::string id;
    std::function<bool(const ProjPoint&)> contains;
};

struct EmpiricalCurrent {
    std::vector<std::string> cell_ids;  // last entry is the complement cell
    std::vector<double> masses;         // nonnegative, sum 1
    double a_n = 0.0;                   // area of the generating disc
    double l_n = 0.0;                   // boundary length
};

/// Discretized Ahlfors current: per-cell share of the disc area, computed by
/// midpoint quadrature of lambda^2 over the parameter disc.  First matching
/// cell wins; unmatched weight goes to the complement cell.
EmpiricalCurrent empirical_current(const PolyMap& f, const std::vector<Cell>& partition,
                                   int nr_per_segment = 512, int ntheta = 256);

/// Real bivariate polynomial, coefficient c[i][j] of x^i y^j.
struct RealPoly2 {
    std::vector<std::vector<double>> c;
    double eval(double x, double y) const;
    RealPoly2 ddx() const;
    RealPoly2 ddy() const;
};

/// Polynomial 1-form P dx + Q dy in the affine chart w = z_1/z_0 of P^1,
/// with x = Re w, y = Im w.
struct ChartOneForm {
    RealPoly2 P, Q;
};

struct ClosednessDefect {
    double stokes_residual = 0.0;    // |int_D f*(d beta) - int_dD f* beta|
    double normalized_defect = 0.0;  // |int_D f*(d beta)| / area
};

/// Pairing of the normalized disc current with d(beta).  The image must stay
/// in the affine chart (checked on a grid).  area_override, when positive,
/// normalizes by the area of a larger generating disc instead of f's own.
ClosednessDefect closedness_defect(const PolyMap& f, const ChartOneForm& beta,
                                   double area_override = -1.0, int nr = 256,
                                   int ntheta = 256);

}  // namespace geolab

#endif
