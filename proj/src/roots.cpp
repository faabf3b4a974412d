#include "anosov/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anosov {

namespace {

std::vector<std::complex<double>> companion_roots(const IntPoly& p) {
    const int n = p.degree();
    std::vector<std::complex<double>> out;
    if (n <= 0) return out;
    if (n == 1) {
        // c0 + c1 x
        out.emplace_back(-to_double(p.c[0]) / to_double(p.c[1]), 0.0);
        return out;
    }
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    const double lead = to_double(p.leading());
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -to_double(p.c[static_cast<std::size_t>(i)]) / lead;
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);
    for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
    return out;
}

std::complex<double> eval_derivative(const IntPoly& p, std::complex<double> z) {
    return eval_complex(derivative(p), z);
}

// Newton polish against the exact coefficients (converted once per call).
std::pair<std::complex<double>, double> polish(const IntPoly& p, std::complex<double> z) {
    const int n = p.degree();
    for (int iter = 0; iter < 64; ++iter) {
        std::complex<double> f = eval_complex(p, z);
        std::complex<double> df = eval_derivative(p, z);
        if (std::abs(df) == 0.0) break;
        std::complex<double> step = f / df;
        z -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    std::complex<double> f = eval_complex(p, z);
    std::complex<double> df = eval_derivative(p, z);
    double err;
    if (std::abs(df) > 0.0)
        err = static_cast<double>(n) * std::abs(f) / std::abs(df);
    else
        err = 1e-6;
    err = std::max(err * 10.0, 1e-14 * std::max(1.0, std::abs(z)));
    return {z, err};
}

} // namespace

std::vector<Root> polynomial_roots(const IntPoly& p) {
    std::vector<Root> roots;
    if (p.degree() <= 0) return roots;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        for (auto z0 : companion_roots(factor)) {
            auto [z, err] = polish(factor, z0);
            // Real/conjugate cleanup: snap tiny imaginary parts of real roots.
            if (std::abs(z.imag()) <= err) z = {z.real(), 0.0};
            roots.push_back(Root{z, mult, err});
        }
    }
    return roots;
}

std::vector<Root> matrix_eigenvalues(const IntMatrix& a) {
    return polynomial_roots(charpoly(a));
}

double spectral_radius(const IntMatrix& a) {
    double r = 0.0;
    for (const auto& root : matrix_eigenvalues(a)) r = std::max(r, std::abs(root.value));
    return r;
}

} // namespace anosov
