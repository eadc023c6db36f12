#ifndef GEOLAB_SEXTICDEFORM_HPP
#define GEOLAB_SEXTICDEFORM_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "geolab/complexgeom.hpp"
#include "geolab/mvpoly.hpp"

namespace geolab {

/// Six planes in general position in P^3 (no quadruple point).
struct PlaneConfig6 {
    std::array<std::array<cplx, 4>, 6> forms;

    explicit PlaneConfig6(std::array<std::array<cplx, 4>, 6> f);
    MPoly form_poly(int i) const;      // the linear form p_i
    MPoly product_of_planes() const;   // p_1 ... p_6
};

struct TriplePointInfo {
    std::array<int, 3> planes;
    ProjPoint point;
};

struct DoubleLineInfo {
    std::pair<int, int> planes;
    std::array<std::vector<cplx>, 2> basis;  // orthonormal basis b0, b1 of the line
    std::vector<int> triple_point_ids;       // exactly 4
};

struct Incidence {
    std::vector<DoubleLineInfo> lines;      // 15
    std::vector<TriplePointInfo> points;    // 20
};

Incidence build_incidence(const PlaneConfig6& config);

/// Degree-6 homogeneous surface datum: Sigma_eps = (prod p_i = eps * s).
struct SexticSurface {
    MPoly s;
    cplx epsilon{1.0, 0.0};

    SexticSurface(MPoly poly, cplx eps);
};

/// Fermat-type starting sextic x^6+y^6+z^6+w^6.
SexticSurface fermat_sextic(cplx eps);

/// Residual |s(q)| / coeff scale at constructed points of Sigma_eps cap P_i
/// (the containment Sigma_eps cap P_i subset S is an algebraic identity).
double incidence_check_sigma(const PlaneConfig6& config, const SexticSurface& S,
                             int samples_per_plane, std::uint64_t seed);

/// Min |s| over the 20 triple points (normalized); small values flag a
/// sextic through a triple point.
double sextic_general_position_check(const PlaneConfig6& config, const Incidence& inc,
                                     const SexticSurface& S);

struct DeformationStep {
    SexticSurface next;
    double delta_residual = 0.0;  // max |monomial| residual on the lines of Delta_k
};

/// S_{k+1} = (p_i3 p_i4 p_i5^2 p_i6^2 = eps_k s_k); verifies that on the lines
/// of Delta_k the zero sets of s_k and s_{k+1} agree (the monomial vanishes).
DeformationStep deformation_step(const PlaneConfig6& config, const SexticSurface& S_k,
                                 const std::array<int, 4>& indices, cplx eps_k,
                                 const std::vector<std::pair<int, int>>& delta_k,
                                 const Incidence& inc);

struct LadderStep {
    double epsilon = 0.0;
    std::vector<ProjPoint> roots;        // the 6 roots of the sextic trace on D
    std::vector<int> nearest_triple;     // index into the line's 4 triple points
    std::vector<double> distance;        // FS distance to that triple point
    double max_distance = 0.0;
};

struct RootTrace {
    std::array<int, 4> factor_indices;       // (i3,i4,i5,i6): exponents (1,1,2,2)
    std::vector<LadderStep> ladder;
    std::array<int, 4> final_cluster_sizes;  // expected (1,1,2,2)
};

/// Roots of (p_i3 p_i4 p_i5^2 p_i6^2 - eps s)|_D over a decreasing eps ladder,
/// with distances to the 4 triple points on D.
RootTrace trace_roots_on_line(const PlaneConfig6& config, const Incidence& inc, int line_id,
                              const MPoly& s, const std::vector<double>& eps_ladder);

/// A general-position configuration: coordinate planes, the sum, and a
/// perturbed sum (throws if the draw is degenerate; retry with another seed).
PlaneConfig6 standard_config6();
PlaneConfig6 random_config6(std::uint64_t seed);

}  // namespace geolab

#endif
