#include "geolab/sexticdeform.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "geolab/poly.hpp"

namespace geolab {

namespace {

Eigen::MatrixXcd rows_matrix(const PlaneConfig6& cfg, const std::vector<int>& idx) {
    Eigen::MatrixXcd M(idx.size(), 4);
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (int c = 0; c < 4; ++c) M(r, c) = cfg.forms[idx[r]][c];
    return M;
}

// orthonormal basis of the null space (last right singular vectors)
std::vector<std::vector<cplx>> null_space(const Eigen::MatrixXcd& M) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
    int rank = int(M.rows());
    std::vector<std::vector<cplx>> basis;
    for (int c = rank; c < 4; ++c) {
        std::vector<cplx> v(4);
        for (int r = 0; r < 4; ++r) v[r] = svd.matrixV()(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

cplx newton_polish(const Poly& p, cplx z) {
    Poly dp = poly_derivative(p);
    for (int it = 0; it < 8; ++it) {
        cplx d = poly_eval(dp, z);
        if (std::abs(d) < 1e-300) break;
        cplx step = poly_eval(p, z) / d;
        z -= step;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
    }
    return z;
}

// roots on P^1 of the homogeneous coefficients c[j] of t0^(d-j) t1^j,
// returned as (t0,t1) pairs; roots at [0:1] recovered from degree deficiency
std::vector<std::pair<cplx, cplx>> homogeneous_roots(const std::vector<cplx>& c) {
    int d = int(c.size()) - 1;
    Poly p(c.begin(), c.end());
    std::vector<std::pair<cplx, cplx>> out;
    Poly q = poly_trim(p, 1e-12);
    for (cplx t : poly_roots(p)) out.emplace_back(cplx(1.0, 0.0), newton_polish(q, t));
    for (int k = int(out.size()); k < d; ++k) out.emplace_back(cplx(0.0, 0.0), cplx(1.0, 0.0));
    return out;
}

ProjPoint line_point(const DoubleLineInfo& line, cplx t0, cplx t1) {
    std::vector<cplx> v(4);
    for (int i = 0; i < 4; ++i) v[i] = line.basis[0][i] * t0 + line.basis[1][i] * t1;
    return ProjPoint::from_unnormalized(std::move(v));
}

}  // namespace

PlaneConfig6::PlaneConfig6(std::array<std::array<cplx, 4>, 6> f) : forms(f) {
    for (auto& row : forms) {
        double n = 0.0;
        for (const auto& c : row) n += std::norm(c);
        n = std::sqrt(n);
        if (n == 0.0) throw std::invalid_argument("PlaneConfig6: zero linear form");
        for (auto& c : row) c /= n;
    }
    // no quadruple point: every 4-subset of (normalized) forms has full rank
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                for (int d = c + 1; d < 6; ++d) {
                    Eigen::Matrix4cd M;
                    std::array<int, 4> idx{a, b, c, d};
                    for (int r = 0; r < 4; ++r)
                        for (int col = 0; col < 4; ++col) M(r, col) = forms[idx[r]][col];
                    if (std::abs(M.determinant()) <= 1e-9)
                        throw std::domain_error(
                            "PlaneConfig6: quadruple point in the configuration");
                }
}

MPoly PlaneConfig6::form_poly(int i) const {
    return MPoly::linear_form({forms[i][0], forms[i][1], forms[i][2], forms[i][3]});
}

MPoly PlaneConfig6::product_of_planes() const {
    MPoly prod = MPoly::constant(4, cplx(1.0, 0.0));
    for (int i = 0; i < 6; ++i) prod = mv_mul(prod, form_poly(i));
    return prod;
}

Incidence build_incidence(const PlaneConfig6& config) {
    Incidence inc;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) {
                auto basis = null_space(rows_matrix(config, {i, j, k}));
                if (basis.size() != 1)
                    throw std::domain_error("build_incidence: rank deficiency at a triple");
                inc.points.push_back(
                    TriplePointInfo{{i, j, k}, ProjPoint::from_unnormalized(basis[0])});
            }
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            auto basis = null_space(rows_matrix(config, {i, j}));
            if (basis.size() != 2)
                throw std::domain_error("build_incidence: rank deficiency at a pair");
            DoubleLineInfo line{{i, j}, {basis[0], basis[1]}, {}};
            for (std::size_t t = 0; t < inc.points.size(); ++t) {
                const auto& pl = inc.points[t].planes;
                if (std::find(pl.begin(), pl.end(), i) != pl.end() &&
                    std::find(pl.begin(), pl.end(), j) != pl.end())
                    line.triple_point_ids.push_back(int(t));
            }
            if (line.triple_point_ids.size() != 4)
                throw std::domain_error("build_incidence: line without exactly 4 triple points");
            inc.lines.push_back(std::move(line));
        }
    return inc;
}

SexticSurface::SexticSurface(MPoly poly, cplx eps) : s(std::move(poly)), epsilon(eps) {
    if (s.nvars != 4) throw std::invalid_argument("SexticSurface: expects 4 variables");
    if (!s.is_homogeneous(6))
        throw std::invalid_argument("SexticSurface: not homogeneous of degree 6");
    if (std::abs(epsilon) == 0.0)
        throw std::invalid_argument("SexticSurface: epsilon must be nonzero");
}

SexticSurface fermat_sextic(cplx eps) {
    MPoly s = MPoly::zero(4);
    for (int i = 0; i < 4; ++i) {
        std::vector<int> e(4, 0);
        e[i] = 6;
        s.add_term(e, cplx(1.0, 0.0));
    }
    return SexticSurface(std::move(s), eps);
}

double incidence_check_sigma(const PlaneConfig6& config, const SexticSurface& S,
                             int samples_per_plane, std::uint64_t seed) {
    if (S.epsilon == cplx(0.0, 0.0))
        throw std::invalid_argument("incidence_check_sigma: epsilon must be nonzero");
    MPoly total = mv_sub(config.product_of_planes(), mv_scale(S.s, S.epsilon));
    double scale = S.s.coeff_scale();
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
        auto basis = null_space(rows_matrix(config, {i}));  // 3-dim null space of p_i
        int produced = 0;
        while (produced < samples_per_plane) {
            // random projective line inside the plane P_i
            std::vector<cplx> c0(4, 0.0), c1(4, 0.0);
            for (int b = 0; b < 3; ++b) {
                cplx a0(nd(gen), nd(gen)), a1(nd(gen), nd(gen));
                for (int r = 0; r < 4; ++r) {
                    c0[r] += a0 * basis[b][r];
                    c1[r] += a1 * basis[b][r];
                }
            }
            auto coeffs = mv_restrict_to_line(total, c0, c1);
            for (auto [t0, t1] : homogeneous_roots(coeffs)) {
                if (produced >= samples_per_plane) break;
                std::vector<cplx> v(4);
                for (int r = 0; r < 4; ++r) v[r] = c0[r] * t0 + c1[r] * t1;
                ProjPoint q = ProjPoint::from_unnormalized(v);
                std::vector<cplx> zc(q.coords.begin(), q.coords.end());
                worst = std::max(worst, std::abs(S.s.eval(zc)) / scale);
                ++produced;
            }
        }
    }
    return worst;
}

double sextic_general_position_check(const PlaneConfig6&, const Incidence& inc,
                                     const SexticSurface& S) {
    double scale = S.s.coeff_scale();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& tp : inc.points) {
        std::vector<cplx> zc(tp.point.coords.begin(), tp.point.coords.end());
        best = std::min(best, std::abs(S.s.eval(zc)) / scale);
    }
    return best;
}

DeformationStep deformation_step(const PlaneConfig6& config, const SexticSurface& S_k,
                                 const std::array<int, 4>& indices, cplx eps_k,
                                 const std::vector<std::pair<int, int>>& delta_k,
                                 const Incidence& inc) {
    if (eps_k == cplx(0.0, 0.0))
        throw std::invalid_argument("deformation_step: eps_k must be nonzero");
    MPoly mono = mv_mul(mv_mul(config.form_poly(indices[0]), config.form_poly(indices[1])),
                        mv_mul(mv_pow(config.form_poly(indices[2]), 2),
                               mv_pow(config.form_poly(indices[3]), 2)));
    MPoly s_next = mv_sub(mono, mv_scale(S_k.s, eps_k));
    if (!s_next.is_homogeneous(6))
        throw std::invalid_argument("deformation_step: degree mismatch");

    // on every line of Delta_k the monomial vanishes identically, so the zero
    // sets of s_k and s_{k+1} there coincide
    double worst = 0.0;
    double scale = mono.coeff_scale();
    for (const auto& pr : delta_k) {
        const DoubleLineInfo* line = nullptr;
        for (const auto& l : inc.lines)
            if (l.planes == pr) line = &l;
        if (!line) throw std::invalid_argument("deformation_step: unknown line in Delta_k");
        for (int j = 0; j < 50; ++j) {
            double phi = M_PI * (j + 0.5) / 50;
            ProjPoint q = line_point(*line, std::cos(phi), std::polar(std::sin(phi), 0.7 * j));
            std::vector<cplx> zc(q.coords.begin(), q.coords.end());
            worst = std::max(worst, std::abs(mono.eval(zc)) / scale);
        }
    }
    return DeformationStep{SexticSurface(std::move(s_next), eps_k), worst};
}

RootTrace trace_roots_on_line(const PlaneConfig6& config, const Incidence& inc, int line_id,
                              const MPoly& s, const std::vector<double>& eps_ladder) {
    const DoubleLineInfo& line = inc.lines.at(line_id);
    // the 4 remaining planes, ascending; first two enter simply, last two squared
    std::array<int, 4> rem{};
    int w = 0;
    for (int k = 0; k < 6; ++k)
        if (k != line.planes.first && k != line.planes.second) rem[w++] = k;

    MPoly mono = mv_mul(mv_mul(config.form_poly(rem[0]), config.form_poly(rem[1])),
                        mv_mul(mv_pow(config.form_poly(rem[2]), 2),
                               mv_pow(config.form_poly(rem[3]), 2)));

    // triple points on D ordered to match the factors
    std::array<ProjPoint, 4> targets = {line_point(line, 1, 0), line_point(line, 1, 0),
                                        line_point(line, 1, 0), line_point(line, 1, 0)};
    for (int fidx = 0; fidx < 4; ++fidx) {
        int k = rem[fidx];
        bool found = false;
        for (int tid : line.triple_point_ids) {
            const auto& pl = inc.points[tid].planes;
            if (std::find(pl.begin(), pl.end(), k) != pl.end()) {
                targets[fidx] = inc.points[tid].point;
                found = true;
            }
        }
        if (!found) throw std::domain_error("trace_roots_on_line: missing triple point");
    }

    RootTrace trace;
    trace.factor_indices = rem;
    for (double eps : eps_ladder) {
        MPoly q = mv_sub(mono, mv_scale(s, cplx(eps, 0.0)));
        auto coeffs = mv_restrict_to_line(q, line.basis[0], line.basis[1]);
        LadderStep step;
        step.epsilon = eps;
        for (auto [t0, t1] : homogeneous_roots(coeffs)) {
            ProjPoint root = line_point(line, t0, t1);
            int nearest = 0;
            double best = std::numeric_limits<double>::infinity();
            for (int f = 0; f < 4; ++f) {
                double d = fs_distance(root, targets[f]);
                if (d < best) {
                    best = d;
                    nearest = f;
                }
            }
            step.roots.push_back(std::move(root));
            step.nearest_triple.push_back(nearest);
            step.distance.push_back(best);
            step.max_distance = std::max(step.max_distance, best);
        }
        if (step.roots.size() != 6)
            throw std::runtime_error("trace_roots_on_line: root count != 6 at eps=" +
                                     std::to_string(eps));
        trace.ladder.push_back(std::move(step));
    }
    trace.final_cluster_sizes = {0, 0, 0, 0};
    for (int n : trace.ladder.back().nearest_triple) ++trace.final_cluster_sizes[n];
    return trace;
}

PlaneConfig6 standard_config6() {
    auto one = cplx(1.0, 0.0);
    std::array<std::array<cplx, 4>, 6> f{};
    for (int i = 0; i < 4; ++i) f[i][i] = one;
    f[4] = {one, one, one, one};
    f[5] = {one, cplx(2.0, 0.0), cplx(3.0, 0.0), cplx(4.0, 0.0)};
    return PlaneConfig6(f);
}

PlaneConfig6 random_config6(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::array<std::array<cplx, 4>, 6> f{};
    for (auto& row : f)
        for (auto& c : row) c = cplx(nd(gen), nd(gen));
    return PlaneConfig6(f);
}

}  // namespace geolab
