#ifndef GEOLAB_HOLOMAP_HPP
#define GEOLAB_HOLOMAP_HPP

#include <string>
#include <vector>

#include "geolab/complexgeom.hpp"
#include "geolab/mvpoly.hpp"
#include "geolab/poly.hpp"

namespace geolab {

/// Holomorphic map D_rho -> P^n given by a polynomial lift to C^{n+1}.
/// Immutable after construction; the constructor rejects lifts whose
/// components simultaneously vanish somewhere on a polar check grid.
struct PolyMap {
    std::vector<Poly> components;
    double domain_radius = 1.0;

    PolyMap() = default;
    PolyMap(std::vector<Poly> comps, double radius);

    std::size_t target_dim() const { return components.size() - 1; }
    std::vector<cplx> lift(cplx z) const;
    std::vector<cplx> lift_derivative(cplx z) const;
};

/// r(z) = center + scale * z.
struct AffineReparam {
    cplx center;
    double scale = 1.0;
};

ProjPoint holomap_eval(const PolyMap& f, cplx z);
double deriv_norm_at(const PolyMap& f, cplx z);

/// f o r with the given new domain radius; exact coefficient arithmetic.
PolyMap reparametrize(const PolyMap& f, const AffineReparam& r, double new_radius);

struct RootDistance {
    cplx limit_root;                  // root of h o f_limit in the open disc
    std::vector<double> seq_distances;  // distance to the nearest root of h o f_n, per n
};

/// Rouche-style stability of intersections, made quantitative: for each root
/// of h o f_limit inside the disc, the distance to the nearest root of
/// h o f_n.  h is a polynomial in the homogeneous coordinates.
std::vector<RootDistance> intersection_stability(const std::vector<PolyMap>& f_seq,
                                                 const PolyMap& f_limit, const MPoly& h);

std::string polymap_to_json(const PolyMap& f);
PolyMap polymap_from_json(const std::string& text);

/// Lift (1, sum_{k<=degree} (c z)^k / k!) of z -> [1 : e^{cz}], with the
/// truncation tail |c|^(d+1) rho^(d+1) e^{|c| rho} / (d+1)! reported.
PolyMap truncated_exp_map(cplx c, int degree, double radius);
double truncated_exp_tail_bound(cplx c, int degree, double radius);

}  // namespace geolab

#endif
