#include "geolab/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geolab {

cplx poly_eval(const Poly& p, cplx z) {
    cplx acc(0.0, 0.0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return Poly{cplx(0.0, 0.0)};
    Poly d(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * double(k);
    return d;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Poly poly_scale(const Poly& a, cplx s) {
    Poly r = a;
    for (auto& c : r) c *= s;
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return Poly{};
    Poly r(a.size() + b.size() - 1, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly poly_pow(const Poly& a, int n) {
    Poly r{cplx(1.0, 0.0)};
    for (int k = 0; k < n; ++k) r = poly_mul(r, a);
    return r;
}

Poly poly_compose_affine(const Poly& p, cplx a, cplx rho) {
    // Horner over the linear polynomial a + rho*z
    Poly acc{cplx(0.0, 0.0)};
    const Poly lin{a, rho};
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = poly_mul(acc, lin);
        if (acc.empty()) acc.push_back(cplx(0.0, 0.0));
        acc[0] += *it;
    }
    acc.resize(std::max<std::size_t>(p.size(), 1), cplx(0.0, 0.0));
    return acc;
}

Poly poly_trim(const Poly& p, double rel_tol) {
    double scale = 0.0;
    for (const auto& c : p) scale = std::max(scale, std::abs(c));
    Poly r = p;
    while (r.size() > 1 && std::abs(r.back()) <= rel_tol * scale) r.pop_back();
    return r;
}

int poly_degree(const Poly& p, double rel_tol) {
    return int(poly_trim(p, rel_tol).size()) - 1;
}

std::vector<cplx> poly_roots(const Poly& p, double rel_tol) {
    Poly q = poly_trim(p, rel_tol);
    int d = int(q.size()) - 1;
    if (d <= 0) return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) C(i, d - 1) = -q[i] / q[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cplx> roots(d);
    for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()(i);
    return roots;
}

}  // namespace geolab
