#ifndef GEOLAB_BRODY_HPP
#define GEOLAB_BRODY_HPP

#include <functional>
#include <vector>

#include "geolab/holomap.hpp"

namespace geolab {

struct BrodyReport {
    cplx basepoint;                  // interior maximizer a of delta*||f'||
    double scale = 0.0;              // 1/||f'(a)||
    double rescaled_domain_radius = 0.0;  // R = delta(a)*||f'(a)||/2
    double sup_deriv_on_rescaled = 0.0;   // grid sup of ||g'|| (must be <= 2)
    double deriv_at_zero = 0.0;           // ||g'(0)|| (must be 1)
};

/// Maximize a smooth objective over the closed disc of the given radius:
/// coarse 64x64 polar grid, then 9-point stencil refinement (shrink 1/3,
/// 40 rounds).  Ties prefer smaller |z|, then smaller arg.
std::pair<cplx, double> maximize_on_disc(const std::function<double(cplx)>& objective,
                                         double radius);

/// Interior maximum of delta(z)*||f'(z)||, delta(z) = distance to the
/// boundary circle of the domain disc.
std::pair<cplx, double> extremal_point(const PolyMap& f);

std::pair<PolyMap, BrodyReport> brody_step(const PolyMap& f);

struct BrodySequenceResult {
    std::vector<PolyMap> rescaled;
    std::vector<BrodyReport> reports;
    std::vector<double> cauchy_defects;  // sup FS distance between consecutive rescaled maps
};

BrodySequenceResult brody_sequence(const std::vector<PolyMap>& f_seq);

}  // namespace geolab

#endif
