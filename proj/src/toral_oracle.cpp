#include "anosov/toral_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "anosov/automorphism.hpp"
#include "anosov/graded_ring.hpp"
#include "anosov/lefschetz.hpp"
#include "anosov/polynomial.hpp"
#include "anosov/roots.hpp"

namespace anosov {

bool is_hyperbolic(const IntMatrix& a) {
    if (!a.is_square() || !a.is_unimodular()) return false;
    IntPoly p = charpoly(a);
    if (!cyclotomic_factor_orders(p).empty()) return false;
    // Unit-circle roots mu satisfy 1/mu = conj(mu), also a root, so they are
    // common roots of p and its reversal. A trivial gcd certifies none exist.
    IntPoly g = poly_gcd(p, reversed(p));
    if (g.degree() <= 0) return true;
    for (const auto& root : polynomial_roots(g)) {
        double m = std::abs(root.value);
        if (std::abs(m - 1.0) <= std::max(1e-9, 10.0 * root.error)) return false;
    }
    return true;
}

ToralMap::ToralMap(IntMatrix matrix) : a(std::move(matrix)) {
    if (!a.is_square()) throw std::domain_error("toral map needs a square matrix");
    if (!a.is_unimodular())
        throw std::domain_error("toral map must be unimodular (det = " + a.det().str() + ")");
    if (!is_hyperbolic(a))
        throw std::domain_error("matrix is not hyperbolic (eigenvalue on the unit circle)");
}

Int fixed_point_count(const ToralMap& map, unsigned long l) {
    if (l < 1) throw std::domain_error("iterate must be >= 1");
    Int d = (map.a.pow(l) - IntMatrix::identity(map.a.rows())).det();
    if (d == 0) throw std::domain_error("non-isolated fixed points: det(A^l - I) = 0");
    return abs_int(d);
}

Int smith_count(const ToralMap& map, unsigned long l) {
    if (l < 1) throw std::domain_error("iterate must be >= 1");
    auto diag = smith_diagonal(map.a.pow(l) - IntMatrix::identity(map.a.rows()));
    Int order = 1;
    for (const auto& d : diag) {
        if (d == 0) throw std::domain_error("non-isolated fixed points: cokernel is infinite");
        order *= d;
    }
    return order;
}

CrossCheckReport lefschetz_cross_check(const ToralMap& map, unsigned long max_l) {
    const int n = static_cast<int>(map.a.rows());
    GradedRingDescription ring = torus_ring(n);
    const auto basis1 = build_basis(ring, 1);

    GeneratorImages images;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = map.a.at(
            static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        images.images[ring.generators()[static_cast<std::size_t>(i)].label] = row;
    }
    GradedAutomorphism aut = induce(ring, images);
    auto seq = lefschetz_sequence(aut, max_l, TraceConvention::ForwardTraces);

    CrossCheckReport report;
    for (unsigned long l = 1; l <= max_l; ++l) {
        CrossCheckRow row;
        row.l = l;
        row.lefschetz = abs_int(seq.values[l - 1]);
        row.det_count = fixed_point_count(map, l);
        row.smith = smith_count(map, l);
        if (row.lefschetz != row.det_count || row.det_count != row.smith)
            throw std::runtime_error("oracle mismatch at l = " + std::to_string(l) + ": |Lambda| = " +
                                     row.lefschetz.str() + ", |det| = " + row.det_count.str() +
                                     ", Smith = " + row.smith.str());
        report.rows.push_back(std::move(row));
    }

    auto verdict = anosov_compatibility(aut, TraceConvention::ForwardTraces);
    report.lambda = verdict.lambda;
    report.coefficient = verdict.coefficient;

    double expanding = 1.0;
    for (const auto& root : matrix_eigenvalues(map.a)) {
        double m = std::abs(root.value);
        if (m > 1.0)
            for (int i = 0; i < root.multiplicity; ++i) expanding *= m;
    }
    report.expanding_product = expanding;

    if (verdict.kind != GrowthVerdict::Kind::Coefficient || verdict.coefficient != 1)
        throw std::runtime_error("growth fit did not produce leading coefficient 1");
    if (std::abs(report.lambda - expanding) > 1e-6 * expanding)
        throw std::runtime_error("growth rate disagrees with the expanding eigenvalue product");
    report.ok = true;
    return report;
}

IntMatrix random_hyperbolic(int n, std::mt19937_64& rng, long entry_bound) {
    if (n < 2) throw std::domain_error("hyperbolic toral automorphisms need n >= 2");
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> shear(1, 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        IntMatrix a = IntMatrix::identity(static_cast<std::size_t>(n));
        if (coin(rng)) a.at(0, 0) = -1;  // cover both determinant signs
        int steps = 3 + static_cast<int>(rng() % 5);
        for (int s = 0; s < steps; ++s) {
            int i = pick(rng), j = pick(rng);
            if (i == j) continue;
            // Elementary shear keeps the determinant.
            IntMatrix e = IntMatrix::identity(static_cast<std::size_t>(n));
            e.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                coin(rng) ? shear(rng) : -shear(rng);
            a = a * e;
        }
        bool small = true;
        for (std::size_t i = 0; i < a.rows() && small; ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (abs_int(a.at(i, j)) > entry_bound) { small = false; break; }
        if (small && is_hyperbolic(a)) return a;
    }
    throw std::runtime_error("failed to sample a hyperbolic matrix");
}

} // namespace anosov
