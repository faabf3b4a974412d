#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "anosov/exact.hpp"
#include "anosov/int_matrix.hpp"

namespace anosov {

/// Univariate polynomial over Z, coefficients ascending (c[k] is the x^k
/// coefficient). Normalized: no trailing zeros; the zero polynomial has an
/// empty coefficient vector.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const Int& leading() const { return c.back(); }
    Int operator()(const Int& x) const;

    bool operator==(const IntPoly& other) const = default;
    std::string to_string() const;

    static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }
    static IntPoly monomial(int k, Int coeff = Int(1));
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

/// Exact quotient when b divides a over Z; nullopt otherwise.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);

IntPoly derivative(const IntPoly& p);
Int content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

/// gcd over Q, returned as a primitive integer polynomial with positive
/// leading coefficient (primitive PRS).
IntPoly poly_gcd(IntPoly a, IntPoly b);

/// Yun's algorithm: p = prod f_i ^ i with f_i squarefree and coprime.
/// Returns the list of (f_i, i) with nonconstant f_i.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

/// x^deg(p) * p(1/x), the coefficient-reversed polynomial.
IntPoly reversed(const IntPoly& p);

/// p(x) == +- x^deg p(1/x) coefficient-wise.
bool is_reciprocal_up_to_sign(const IntPoly& p);

/// k-th cyclotomic polynomial, computed by exact division of x^k - 1.
IntPoly cyclotomic(int k);

/// All k >= 1 with phi(k) <= deg p such that the k-th cyclotomic polynomial
/// divides p. Detects every root-of-unity eigenvalue of an integer matrix
/// through its characteristic polynomial.
std::vector<int> cyclotomic_factor_orders(const IntPoly& p);

/// True iff every root of p is a root of unity (p is, up to sign, a product
/// of cyclotomic polynomials). An integer matrix has bounded powers of traces
/// exactly when this holds for its characteristic polynomial (Kronecker).
bool all_roots_of_unity(const IntPoly& p);

int euler_phi(int k);

/// Characteristic polynomial det(xI - A), exact (Faddeev-LeVerrier).
IntPoly charpoly(const IntMatrix& a);

/// Horner evaluation with double-converted coefficients.
std::complex<double> eval_complex(const IntPoly& p, std::complex<double> z);

} // namespace anosov
