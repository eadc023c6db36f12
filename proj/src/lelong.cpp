#include "geolab/lelong.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace geolab {

namespace {
// 32-node Gauss-Legendre on [0,1]
struct GaussRule {
    std::array<double, 32> x{}, w{};
    GaussRule() {
        // nodes/weights on [-1,1], mapped
        for (int i = 0; i < 32; ++i) {
            // Newton on Legendre P_32
            double t = std::cos(M_PI * (i + 0.75) / (32 + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= 32; ++k) {
                    double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = 32.0 * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= 32; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = 32.0 * (t * p1 - p0) / (t * t - 1.0);
            x[i] = 0.5 * (t + 1.0);
            w[i] = 1.0 / ((1.0 - t * t) * dp * dp);  // weight/2 on [0,1]
        }
    }
};
const GaussRule kGauss;
}  // namespace

BallCurve::BallCurve(std::vector<Poly> comps, double eps, double pr)
    : components(std::move(comps)), ball_radius(eps), param_radius(pr) {
    if (components.empty()) throw std::invalid_argument("BallCurve: no components");
    if (!(eps > 0.0) || !(pr > 0.0)) throw std::invalid_argument("BallCurve: positive radii");
    double o = image_norm(cplx(0.0, 0.0));
    through_origin = o <= 1e-12;
    // properness surrogate: the curve exits the ball before the parameter boundary
    for (int j = 0; j < 256; ++j) {
        cplx z = std::polar(param_radius, 2.0 * M_PI * j / 256);
        if (image_norm(z) < ball_radius)
            throw std::domain_error(
                "BallCurve: parametrization does not exit the ball before the parameter boundary");
    }
}

double BallCurve::image_norm(cplx z) const {
    double s = 0.0;
    for (const auto& p : components) s += std::norm(poly_eval(p, z));
    return std::sqrt(s);
}

double BallCurve::area_density(cplx z) const {
    double s = 0.0;
    for (const auto& p : components) s += std::norm(poly_eval(poly_derivative(p), z));
    return s;
}

namespace {
// first crossing of |gamma| = r along the ray of angle theta (the corpus
// curves have radially monotone |gamma|, so this is the exit point)
double exit_parameter(const BallCurve& c, double theta, double r) {
    const int nscan = 512;
    double prev_t = 0.0;
    double prev_v = c.image_norm(cplx(0.0, 0.0)) - r;
    for (int i = 1; i <= nscan; ++i) {
        double t = c.param_radius * double(i) / nscan;
        double v = c.image_norm(std::polar(t, theta)) - r;
        if (prev_v <= 0.0 && v > 0.0) {
            double lo = prev_t, hi = t;
            for (int k = 0; k < 60; ++k) {
                double mid = 0.5 * (lo + hi);
                if (c.image_norm(std::polar(mid, theta)) - r > 0.0)
                    hi = mid;
                else
                    lo = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_t = t;
        prev_v = v;
    }
    return c.param_radius;
}
}  // namespace

double area_in_ball(const BallCurve& c, double r, int ntheta) {
    if (!(r > 0.0) || r > c.ball_radius * (1.0 + 1e-12))
        throw std::domain_error("area_in_ball: radius out of range");
    double acc = 0.0;
    for (int j = 0; j < ntheta; ++j) {
        double theta = 2.0 * M_PI * j / ntheta;
        double tstar = exit_parameter(c, theta, r);
        double ray = 0.0;
        for (int k = 0; k < 32; ++k) {
            double t = tstar * kGauss.x[k];
            ray += kGauss.w[k] * c.area_density(std::polar(t, theta)) * t;
        }
        acc += ray * tstar;
    }
    return acc * 2.0 * M_PI / ntheta;
}

std::vector<double> monotonicity_profile(const BallCurve& c, const std::vector<double>& radii,
                                         int ntheta) {
    std::vector<double> out;
    for (double r : radii) out.push_back(area_in_ball(c, r, ntheta) / (r * r));
    return out;
}

double lelong_bound_check(const BallCurve& c, int ntheta) {
    if (!c.through_origin)
        throw std::domain_error("lelong_bound_check: curve does not pass through the origin");
    return area_in_ball(c, c.ball_radius, ntheta) / (M_PI * c.ball_radius * c.ball_radius);
}

}  // namespace geolab
