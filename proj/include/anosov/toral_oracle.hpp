#pragma once

#include <random>
#include <string>
#include <vector>

#include "anosov/exact.hpp"
#include "anosov/int_matrix.hpp"

namespace anosov {

/// A hyperbolic automorphism of the n-torus: A in GL(n,Z) with no
/// eigenvalue on the unit circle. Hyperbolicity is checked exactly through
/// the characteristic polynomial (no cyclotomic factor, and unit-circle
/// roots can only live in gcd(p, x^n p(1/x)), whose roots are confirmed
/// off-circle numerically).
struct ToralMap {
    IntMatrix a;

    explicit ToralMap(IntMatrix matrix);
};

bool is_hyperbolic(const IntMatrix& a);

/// |det(A^l - I)|: the number of points on the torus fixed by the l-th
/// iterate. Errors when the determinant vanishes (non-isolated fixed points).
Int fixed_point_count(const ToralMap& map, unsigned long l);

/// Order of Z^n / (A^l - I) Z^n via the Smith normal form; an independent
/// route to the same count.
Int smith_count(const ToralMap& map, unsigned long l);

struct CrossCheckRow {
    unsigned long l;
    Int lefschetz;    // |Lambda_forward(l)| through the torus ring
    Int det_count;    // |det(A^l - I)|
    Int smith;        // Smith cokernel order
};

struct CrossCheckReport {
    std::vector<CrossCheckRow> rows;
    double lambda = 0.0;        // dominant growth rate from the spectral fit
    long long coefficient = 0;  // leading coefficient (1 for a transitive model)
    double expanding_product = 0.0;  // product of expanding eigenvalue moduli
    bool ok = false;
};

/// Builds the torus ring, induces the automorphism from A, and asserts the
/// three counts agree exactly for l = 1..L; then fits the growth and checks
/// the leading coefficient is 1 with rate equal to the product of expanding
/// eigenvalue moduli. Throws on any mismatch, naming the first bad l.
CrossCheckReport lefschetz_cross_check(const ToralMap& map, unsigned long max_l);

/// Random hyperbolic unimodular matrix: a product of elementary shears with
/// small entries, rejection-sampled on hyperbolicity and an entry bound.
IntMatrix random_hyperbolic(int n, std::mt19937_64& rng, long entry_bound = 50);

} // namespace anosov
