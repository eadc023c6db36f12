// Experiment harness: dispatches scenario subcommands to the library and
// writes deterministic CSV artifacts (header row, '.' decimals, '\n' endings).
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "geolab/brody.hpp"
#include "geolab/greenpoly.hpp"
#include "geolab/holomap.hpp"
#include "geolab/lelong.hpp"
#include "geolab/lengtharea.hpp"
#include "geolab/sexticdeform.hpp"
#include "geolab/winkelmann.hpp"

namespace {

using namespace geolab;

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitInvariant = 4;

struct GlobalOpts {
    std::string out;
    std::uint64_t seed = 1;
    double tol = 1e-4;
    int nr = 256;
    int ntheta = 256;
    bool selftest = false;
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_artifact(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(g.out, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file " + g.out);
    os << text;
}

PolyMap family_map(const std::string& family, int n) {
    if (family == "nz")
        return PolyMap({Poly{cplx(1.0, 0.0)}, Poly{cplx(0.0, 0.0), cplx(double(n), 0.0)}}, 1.0);
    if (family == "exp") return truncated_exp_map(cplx(double(n), 0.0), 60, 1.0);
    if (family == "zplusz2")
        return PolyMap({Poly{cplx(1.0, 0.0)},
                        Poly{cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(1.0, 0.0)}},
                       1.0);
    throw std::invalid_argument("cli.brody: unknown family '" + family + "'");
}

int run_brody(const GlobalOpts& g, const std::string& family, std::vector<int> ns) {
    if (g.selftest) {
        auto [g1, rep] = brody_step(family_map("nz", 1));
        if (std::abs(rep.deriv_at_zero - 1.0) > 1e-6 ||
            std::abs(rep.rescaled_domain_radius - 0.5) > 1e-9)
            return kExitInvariant;
        std::cout << "brody selftest ok\n";
        return kExitOk;
    }
    std::vector<PolyMap> seq;
    for (int n : ns) seq.push_back(family_map(family, n));
    auto res = brody_sequence(seq);
    std::ostringstream os;
    os << "n,a_re,a_im,scale,R,deriv_at_zero,sup_deriv,cauchy_defect\n";
    for (std::size_t i = 0; i < res.reports.size(); ++i) {
        const auto& r = res.reports[i];
        if (r.deriv_at_zero < 1.0 - 1e-6 || r.deriv_at_zero > 1.0 + 1e-6 ||
            r.sup_deriv_on_rescaled > 2.0 + 1e-6)
            return kExitInvariant;
        double defect = i + 1 < res.reports.size() ? res.cauchy_defects[i] : 0.0;
        os << ns[i] << ',' << fmt(r.basepoint.real()) << ',' << fmt(r.basepoint.imag()) << ','
           << fmt(r.scale) << ',' << fmt(r.rescaled_domain_radius) << ','
           << fmt(r.deriv_at_zero) << ',' << fmt(r.sup_deriv_on_rescaled) << ',' << fmt(defect)
           << '\n';
    }
    write_artifact(g, os.str());
    return kExitOk;
}

int run_ahlfors(const GlobalOpts& g, const std::string& family, int n, double rho_max) {
    if (g.selftest) {
        PolyMap f = family_map("nz", 1);
        auto p = radial_profile(f, 64, 64);
        if (std::abs(p.l_of_r.back() - M_PI) > 1e-6) return kExitInvariant;
        std::cout << "ahlfors selftest ok\n";
        return kExitOk;
    }
    PolyMap base = family_map(family, n);
    PolyMap f(base.components, rho_max);  // extend the domain to rho_max
    RadialProfile p = graded_profile(f, rho_max, g.nr, g.ntheta);
    double worst = length_area_inequality_check(p);
    std::ostringstream os;
    os << "r,l,a,ratio,cs_violation\n";
    for (std::size_t i = 0; i < p.radii.size(); ++i) {
        double l2 = p.l_of_r[i] * p.l_of_r[i];
        double viol = (l2 - 2.0 * M_PI * p.radii[i] * p.aprime_of_r[i]) / std::max(l2, 1e-30);
        os << fmt(p.radii[i]) << ',' << fmt(p.l_of_r[i]) << ',' << fmt(p.a_of_r[i]) << ','
           << fmt(p.l_of_r[i] / std::max(p.a_of_r[i], 1e-300)) << ',' << fmt(viol) << '\n';
    }
    write_artifact(g, os.str());
    return worst > g.tol ? kExitInvariant : kExitOk;
}

int run_current(const GlobalOpts& g, const std::string& family, int n, double rho) {
    std::vector<Cell> cells{{"chart_ball", [](const ProjPoint& q) {
                                 return std::abs(q.coords[1]) <= std::abs(q.coords[0]);
                             }}};
    if (g.selftest) {
        EmpiricalCurrent c = empirical_current(family_map("nz", 1), cells, 64, 64);
        double sum = c.masses[0] + c.masses[1];
        if (std::abs(sum - 1.0) > 1e-9) return kExitInvariant;
        std::cout << "current selftest ok\n";
        return kExitOk;
    }
    PolyMap base = family_map(family, n);
    PolyMap f(base.components, rho);
    EmpiricalCurrent c = empirical_current(f, cells, g.nr, g.ntheta);
    double sum = 0.0;
    for (double m : c.masses) {
        if (m < 0.0) return kExitInvariant;
        sum += m;
    }
    if (std::abs(sum - 1.0) > 1e-9) return kExitInvariant;
    std::ostringstream os;
    os << "cell_id,mass,a_n,l_n,ratio\n";
    for (std::size_t i = 0; i < c.masses.size(); ++i)
        os << c.cell_ids[i] << ',' << fmt(c.masses[i]) << ',' << fmt(c.a_n) << ','
           << fmt(c.l_n) << ',' << fmt(c.l_n / c.a_n) << '\n';
    write_artifact(g, os.str());
    return kExitOk;
}

BallCurve named_curve(const std::string& name, double eps) {
    Poly z{cplx(0.0, 0.0), cplx(1.0, 0.0)};
    if (name == "line") return BallCurve({z, Poly{cplx(0.0, 0.0)}}, eps, 2.0 * eps);
    if (name == "zz2") return BallCurve({z, poly_mul(z, z)}, eps, 2.0 * eps);
    if (name == "zz3") return BallCurve({z, poly_mul(z, poly_mul(z, z))}, eps, 2.0 * eps);
    throw std::invalid_argument("cli.lelong: unknown curve '" + name + "'");
}

int run_lelong(const GlobalOpts& g, const std::string& curve, double eps) {
    BallCurve c = named_curve(curve, eps);
    if (g.selftest) {
        if (std::abs(lelong_bound_check(named_curve("line", 1.0)) - 1.0) > 1e-3)
            return kExitInvariant;
        std::cout << "lelong selftest ok\n";
        return kExitOk;
    }
    std::ostringstream os;
    os << "r,a,a_over_r2\n";
    double prev = -1.0;
    for (int i = 1; i <= 24; ++i) {
        double r = eps * double(i) / 24.0;
        double a = area_in_ball(c, r);
        double ratio = a / (r * r);
        if (prev > 0.0 && ratio < prev * (1.0 - 1e-4)) return kExitInvariant;
        prev = ratio;
        os << fmt(r) << ',' << fmt(a) << ',' << fmt(ratio) << '\n';
    }
    write_artifact(g, os.str());
    return kExitOk;
}

LineConfig5 config5_from_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cli.green: cannot open config " + path);
    nlohmann::json j = nlohmann::json::parse(is);
    std::array<std::array<cplx, 3>, 5> forms{};
    auto rows = j.at("forms");
    if (rows.size() != 5) throw std::invalid_argument("cli.green: config needs 5 forms");
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < 3; ++k)
            forms[i][k] = cplx(rows[i][k][0].get<double>(), rows[i][k][1].get<double>());
    return LineConfig5(forms);
}

LineConfig5 default_config5() {
    auto one = cplx(1.0, 0.0);
    std::array<std::array<cplx, 3>, 5> f{};
    f[0] = {one, 0.0, 0.0};
    f[1] = {0.0, one, 0.0};
    f[2] = {0.0, 0.0, one};
    f[3] = {one, one, one};
    f[4] = {one, cplx(2.0, 0.0), cplx(3.0, 0.0)};
    return LineConfig5(f);
}

int run_green(const GlobalOpts& g, const std::string& config_path, const std::string& check,
              double eps, int n, int samples) {
    LineConfig5 cfg = config_path.empty() ? default_config5() : config5_from_json(config_path);
    if (g.selftest) {
        ProjPoint e = embed(cfg, ProjPoint::from_unnormalized({cplx(1, 0), cplx(0, 0), cplx(0, 0)}));
        if (fs_distance(e, ProjPoint::from_unnormalized(
                               {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0), cplx(1, 0)})) >
            1e-12)
            return kExitInvariant;
        std::cout << "green selftest ok\n";
        return kExitOk;
    }
    if (check == "preimage") {
        int bad = power_preimage_identity_check(eps, n, samples, g.seed);
        std::ostringstream os;
        os << "epsilon,n,samples,discrepancies\n"
           << fmt(eps) << ',' << n << ',' << samples << ',' << bad << '\n';
        write_artifact(g, os.str());
        return bad == 0 ? kExitOk : kExitInvariant;
    }
    // default check: epsilon estimate + per-point membership margins
    EpsilonEstimate est = epsilon_for_config(cfg, samples);
    std::ostringstream os;
    os << "point_id,margin,faces\n";
    for (int i = 0; i < std::min(samples, 256); ++i) {
        ProjPoint z2 = random_proj_point(2, g.seed, std::uint64_t(i));
        ProjPoint e = embed(cfg, z2);
        MembershipResult m = polyhedron_membership(est.epsilon, e);
        if (!m.member) return kExitInvariant;
        std::size_t nfaces = 0;
        try {
            nfaces = face_decomposition(e).size();
        } catch (const std::domain_error&) {
            nfaces = 0;  // generic embedded points are not on X_1
        }
        os << i << ',' << fmt(m.margin) << ',' << nfaces << '\n';
    }
    write_artifact(g, os.str());
    return kExitOk;
}

int run_sextic(const GlobalOpts& g, int line_id) {
    PlaneConfig6 cfg = standard_config6();
    Incidence inc = build_incidence(cfg);
    if (g.selftest) {
        if (inc.lines.size() != 15 || inc.points.size() != 20) return kExitInvariant;
        std::cout << "sextic selftest ok\n";
        return kExitOk;
    }
    SexticSurface S = fermat_sextic(cplx(1.0, 0.0));
    std::vector<double> ladder{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    RootTrace trace = trace_roots_on_line(cfg, inc, line_id, S.s, ladder);
    std::ostringstream os;
    os << "line_id,epsilon,root_id,dist_to_nearest_triple,cluster_id\n";
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& step : trace.ladder) {
        if (step.max_distance > prev) return kExitInvariant;
        prev = step.max_distance;
        for (std::size_t r = 0; r < step.roots.size(); ++r)
            os << line_id << ',' << fmt(step.epsilon) << ',' << r << ','
               << fmt(step.distance[r]) << ',' << step.nearest_triple[r] << '\n';
    }
    write_artifact(g, os.str());
    return kExitOk;
}

int run_winkelmann(const GlobalOpts& g, int k, int n, bool locus) {
    double lambda = golden_slope();
    if (g.selftest) {
        LineDiscScenario s(lambda, 1);
        if (s.at(cplx(0.0, 0.0)).dist_to_origin > 1e-12) return kExitInvariant;
        std::cout << "winkelmann selftest ok\n";
        return kExitOk;
    }
    std::ostringstream os;
    if (locus) {
        cplx q1(0.3, 0.2), q2(0.31, 0.17);
        std::vector<int> ladder;
        for (int m = 10; m <= n; m *= 2) ladder.push_back(m);
        auto entries = brody_locus_report(lambda, q1, q2, ladder);
        os << "n,argmax_re,argmax_im,dist_to_p,lift_norm,control_dist\n";
        for (const auto& e : entries)
            os << e.n << ',' << fmt(e.argmax.real()) << ',' << fmt(e.argmax.imag()) << ','
               << fmt(e.dist_to_p) << ',' << fmt(e.lift_norm) << ',' << fmt(e.control_dist)
               << '\n';
    } else {
        LineDiscScenario s(lambda, n);
        auto rep = equidistribution_report(s, k);
        os << "box_i,box_j,mass\n";
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                os << i << ',' << j << ',' << fmt(rep.masses[std::size_t(i) * k + j]) << '\n';
    }
    write_artifact(g, os.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for Brody reparametrization, Ahlfors currents and "
                 "hyperplane-configuration experiments"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global options after the subcommand too
    GlobalOpts g;
    app.add_option("--out", g.out, "output CSV path (stdout if omitted)");
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--tol", g.tol, "tolerance override")->check(CLI::PositiveNumber);
    app.add_option("--nr", g.nr, "radial quadrature size")->check(CLI::PositiveNumber);
    app.add_option("--ntheta", g.ntheta, "angular quadrature size")->check(CLI::PositiveNumber);
    app.add_flag("--selftest", g.selftest, "run the subcommand's built-in checks");

    std::string family = "nz", check, config_path, curve = "line";
    std::vector<int> ns{1, 2, 4, 8};
    int n = 1, k = 4, samples = 1000, line_id = 0, wink_n = 200;
    double rho_max = 100.0, eps = 0.25, ball_eps = 1.0;
    bool locus = false;

    auto* brody_cmd = app.add_subcommand("brody", "Brody reparametrization of a map family");
    brody_cmd->add_option("--family", family);
    brody_cmd->add_option("--n", ns);

    auto* ahlfors_cmd = app.add_subcommand("ahlfors", "length-area profile and ratios");
    ahlfors_cmd->add_option("--family", family);
    ahlfors_cmd->add_option("--scale", n);
    ahlfors_cmd->add_option("--rho-max", rho_max);

    auto* current_cmd = app.add_subcommand("current", "empirical current cell masses");
    current_cmd->add_option("--family", family);
    current_cmd->add_option("--scale", n);
    current_cmd->add_option("--rho", rho_max);

    auto* lelong_cmd = app.add_subcommand("lelong", "area monotonicity in a ball");
    lelong_cmd->add_option("--curve", curve);
    lelong_cmd->add_option("--eps", ball_eps);

    auto* green_cmd = app.add_subcommand("green", "polyhedron membership experiments");
    green_cmd->add_option("--config", config_path);
    green_cmd->add_option("--check", check);
    green_cmd->add_option("--eps", eps);
    green_cmd->add_option("--n", n);
    green_cmd->add_option("--samples", samples);

    auto* sextic_cmd = app.add_subcommand("sextic", "sextic root migration on a double line");
    sextic_cmd->add_option("--line", line_id);

    auto* wink_cmd = app.add_subcommand("winkelmann", "torus disc experiments");
    wink_cmd->add_option("--k", k);
    wink_cmd->add_option("--n", wink_n);
    wink_cmd->add_flag("--locus", locus);

    CLI11_PARSE(app, argc, argv);

    try {
        if (brody_cmd->parsed()) return run_brody(g, family, ns);
        if (ahlfors_cmd->parsed()) return run_ahlfors(g, family, n, rho_max);
        if (current_cmd->parsed()) return run_current(g, family, n, rho_max);
        if (lelong_cmd->parsed()) return run_lelong(g, curve, ball_eps);
        if (green_cmd->parsed()) return run_green(g, config_path, check, eps, n, samples);
        if (sextic_cmd->parsed()) return run_sextic(g, line_id);
        if (wink_cmd->parsed()) return run_winkelmann(g, k, wink_n, locus);
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitPrecondition;
}
