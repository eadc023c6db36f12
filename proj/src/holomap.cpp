#include "geolab/holomap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace geolab {

namespace {
constexpr int kDegeneracyGridR = 64;
constexpr int kDegeneracyGridTheta = 64;

double lift_scale(const std::vector<Poly>& comps) {
    double s = 0.0;
    for (const auto& p : comps)
        for (const auto& c : p) s = std::max(s, std::abs(c));
    return s;
}
}  // namespace

PolyMap::PolyMap(std::vector<Poly> comps, double radius)
    : components(std::move(comps)), domain_radius(radius) {
    if (components.size() < 2) throw std::invalid_argument("PolyMap: need >= 2 components");
    if (!(radius > 0.0)) throw std::invalid_argument("PolyMap: domain radius must be positive");
    // degeneracy check on a polar grid of the closed domain disc
    double scale = lift_scale(components);
    if (scale == 0.0) throw std::domain_error("PolyMap: identically zero lift");
    for (int i = 0; i <= kDegeneracyGridR; ++i) {
        double r = domain_radius * double(i) / kDegeneracyGridR;
        for (int j = 0; j < kDegeneracyGridTheta; ++j) {
            double th = 2.0 * M_PI * double(j) / kDegeneracyGridTheta;
            cplx z = std::polar(r, th);
            double m = 0.0;
            for (const auto& p : components) m = std::max(m, std::abs(poly_eval(p, z)));
            if (m <= 1e-12 * scale)
                throw std::domain_error("PolyMap: all components vanish near a grid point");
            if (i == 0) break;  // center only once
        }
    }
}

std::vector<cplx> PolyMap::lift(cplx z) const {
    std::vector<cplx> v(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) v[i] = poly_eval(components[i], z);
    return v;
}

std::vector<cplx> PolyMap::lift_derivative(cplx z) const {
    std::vector<cplx> v(components.size());
    for (std::size_t i = 0; i < components.size(); ++i)
        v[i] = poly_eval(poly_derivative(components[i]), z);
    return v;
}

ProjPoint holomap_eval(const PolyMap& f, cplx z) {
    if (std::abs(z) > f.domain_radius * (1.0 + 1e-12))
        throw std::domain_error("holomap_eval: point outside domain disc");
    auto v = f.lift(z);
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    if (m <= 1e-14 * lift_scale(f.components))
        throw std::domain_error("holomap_eval: degenerate lift value");
    return ProjPoint::from_unnormalized(std::move(v));
}

double deriv_norm_at(const PolyMap& f, cplx z) {
    if (std::abs(z) > f.domain_radius * (1.0 + 1e-12))
        throw std::domain_error("deriv_norm_at: point outside domain disc");
    return fs_deriv_norm(f.lift(z), f.lift_derivative(z));
}

PolyMap reparametrize(const PolyMap& f, const AffineReparam& r, double new_radius) {
    if (!(r.scale > 0.0)) throw std::invalid_argument("reparametrize: scale must be positive");
    double reach = std::abs(r.center) + r.scale * new_radius;
    if (reach > f.domain_radius * (1.0 + 1e-9))
        throw std::domain_error("reparametrize: image of new disc (radius " +
                                std::to_string(reach) + ") leaves old domain disc");
    std::vector<Poly> comps(f.components.size());
    for (std::size_t i = 0; i < f.components.size(); ++i)
        comps[i] = poly_compose_affine(f.components[i], r.center, r.scale);
    return PolyMap(std::move(comps), new_radius);
}

std::vector<RootDistance> intersection_stability(const std::vector<PolyMap>& f_seq,
                                                 const PolyMap& f_limit, const MPoly& h) {
    Poly hf = mv_compose_univariate(h, f_limit.components);
    double scale = 0.0;
    for (const auto& c : hf) scale = std::max(scale, std::abs(c));
    if (scale == 0.0 || poly_degree(hf) < 0)
        throw std::domain_error("intersection_stability: h o f_limit identically zero");
    bool nonzero = poly_trim(hf).size() > 1 || std::abs(poly_trim(hf)[0]) > 0.0;
    if (!nonzero)
        throw std::domain_error("intersection_stability: h o f_limit identically zero");

    std::vector<cplx> limit_roots;
    for (cplx z : poly_roots(hf))
        if (std::abs(z) < f_limit.domain_radius) limit_roots.push_back(z);

    std::vector<std::vector<cplx>> seq_roots(f_seq.size());
    for (std::size_t n = 0; n < f_seq.size(); ++n)
        seq_roots[n] = poly_roots(mv_compose_univariate(h, f_seq[n].components));

    std::vector<RootDistance> report;
    for (cplx z0 : limit_roots) {
        RootDistance rd{z0, {}};
        for (const auto& roots : seq_roots) {
            double best = std::numeric_limits<double>::infinity();
            for (cplx w : roots) best = std::min(best, std::abs(w - z0));
            rd.seq_distances.push_back(best);
        }
        report.push_back(std::move(rd));
    }
    return report;
}

std::string polymap_to_json(const PolyMap& f) {
    nlohmann::json j;
    j["domain_radius"] = f.domain_radius;
    auto& comps = j["components"];
    comps = nlohmann::json::array();
    for (const auto& p : f.components) {
        nlohmann::json jp = nlohmann::json::array();
        for (const auto& c : p) jp.push_back({c.real(), c.imag()});
        comps.push_back(jp);
    }
    return j.dump();
}

PolyMap polymap_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Poly> comps;
    for (const auto& jp : j.at("components")) {
        Poly p;
        for (const auto& jc : jp) p.emplace_back(jc.at(0).get<double>(), jc.at(1).get<double>());
        comps.push_back(std::move(p));
    }
    return PolyMap(std::move(comps), j.at("domain_radius").get<double>());
}

PolyMap truncated_exp_map(cplx c, int degree, double radius) {
    Poly p(degree + 1);
    cplx term(1.0, 0.0);
    p[0] = term;
    for (int k = 1; k <= degree; ++k) {
        term *= c / double(k);
        p[k] = term;
    }
    return PolyMap({Poly{cplx(1.0, 0.0)}, std::move(p)}, radius);
}

double truncated_exp_tail_bound(cplx c, int degree, double radius) {
    double x = std::abs(c) * radius;
    double lead = 1.0;
    for (int k = 1; k <= degree + 1; ++k) lead *= x / double(k);
    return lead * std::exp(x);
}

}  // namespace geolab
