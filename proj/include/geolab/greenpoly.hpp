#ifndef GEOLAB_GREENPOLY_HPP
#define GEOLAB_GREENPOLY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "geolab/complexgeom.hpp"

namespace geolab {

/// Five linear forms on C^3, in general position (no triple point).
struct LineConfig5 {
    std::array<std::array<cplx, 3>, 5> forms;

    explicit LineConfig5(std::array<std::array<cplx, 3>, 5> f);
};

/// z in P^2 -> [l_1(z) : ... : l_5(z)] in P^4.
ProjPoint embed(const LineConfig5& config, const ProjPoint& z);

/// Componentwise n-th power, renormalized.
ProjPoint power_map(int n, const ProjPoint& z);

struct MembershipResult {
    bool member = false;
    std::array<int, 3> worst_triple{};
    double margin = 0.0;  // min over triples of (max of triple - eps*||z||)
};

/// Membership of the polyhedron X_eps in P^4 (all 10 coordinate triples).
MembershipResult polyhedron_membership(double epsilon, const ProjPoint& z);

/// All faces X_{i,j,k} (|z_i|=|z_j|=|z_k|=||z||) containing a member of X_1.
std::vector<std::array<int, 3>> face_decomposition(const ProjPoint& z, double tol = 1e-9);

struct EpsilonEstimate {
    double epsilon = 0.0;   // sampled lower bound
    bool near_degenerate = false;  // a double point nearly collapses to a triple point
};

/// Sampled min over P^2 of third-largest/largest |l_i|, Halton sampling plus
/// refinement rings around the 10 pairwise intersection points.
EpsilonEstimate epsilon_for_config(const LineConfig5& config, int sample_budget);

/// Exactness check of F_n^{-1}(X_eps) = X_{eps^(1/n)} on random points.
/// Returns the number of membership discrepancies (must be 0).
int power_preimage_identity_check(double epsilon, int n, int samples, std::uint64_t seed);

/// Deterministic quasi-random point of P^4 (also usable for tests).
ProjPoint random_proj_point(std::size_t dim, std::uint64_t seed, std::uint64_t index);

}  // namespace geolab

#endif
