#pragma once

#include <complex>
#include <vector>

#include "anosov/polynomial.hpp"

namespace anosov {

struct Root {
    std::complex<double> value;
    int multiplicity = 1;
    double error = 0.0;  // a posteriori radius estimate
};

/// All complex roots of p with multiplicities. Squarefree factors are split
/// off exactly (Yun), each factor's roots come from its balanced companion
/// matrix and are polished by Newton iteration against the exact
/// coefficients; `error` is the standard |p/p'| first-order bound, inflated.
std::vector<Root> polynomial_roots(const IntPoly& p);

/// Eigenvalues of an integer matrix via its exact characteristic polynomial.
std::vector<Root> matrix_eigenvalues(const IntMatrix& a);

/// Largest eigenvalue modulus (0 for the empty matrix).
double spectral_radius(const IntMatrix& a);

} // namespace anosov
