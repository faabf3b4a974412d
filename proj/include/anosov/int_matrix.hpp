#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "anosov/exact.hpp"

namespace anosov {

/// Dense matrix over arbitrary-precision integers. Row-major storage.
/// Sizes here are tiny (cohomology ranks of desk-scale manifolds), so the
/// implementation favors exactness and clarity over asymptotics.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Int& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const Int& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Int& s) const;

    /// A^k for k >= 0 by repeated squaring.
    IntMatrix pow(unsigned long k) const;

    Int trace() const;

    /// Exact determinant via fraction-free (Bareiss) elimination.
    Int det() const;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_identity() const;
    bool is_unimodular() const;  // square with det = +-1

    /// Inverse of a unimodular matrix; exact, integral by construction.
    /// Throws std::domain_error if det is not +-1.
    IntMatrix inverse_unimodular() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// Kronecker (tensor) product in row-major block order:
/// (A (x) B)[i1*rb+i2][j1*cb+j2] = A[i1][j1] * B[i2][j2].
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// All k-element subsets of {0,...,n-1} as sorted index tuples in
/// lexicographic order. This ordering indexes exterior-power bases.
std::vector<std::vector<int>> sorted_subsets(int n, int k);

/// k-th exterior power: entries are k x k minors of a square matrix,
/// rows/columns indexed by sorted_subsets(n, k).
/// Lambda^0 = [1], Lambda^n = [det].
IntMatrix exterior_power(const IntMatrix& a, int k);

/// Smith normal form: U * A * V = S with U, V unimodular and S diagonal,
/// diagonal entries nonnegative and each dividing the next.
struct SmithResult {
    IntMatrix u, s, v;
};
SmithResult smith_normal_form(const IntMatrix& a);

/// Diagonal of the Smith form only (cheaper bookkeeping).
std::vector<Int> smith_diagonal(const IntMatrix& a);

/// Basis of the saturated integer kernel {x : A x = 0} as matrix columns.
/// Saturated: the basis spans ker(A) intersected with Z^n as a direct summand.
IntMatrix integer_kernel_basis(const IntMatrix& a);

/// Rank over Q.
std::size_t rational_rank(const IntMatrix& a);

/// Exact solve B * X = C with B of full column rank (tall or square);
/// throws std::domain_error if inconsistent or rank-deficient.
/// Returns X with rational entries cleared: throws if X is not integral
/// when require_integral is set.
IntMatrix solve_exact(const IntMatrix& b, const IntMatrix& c, bool require_integral);

} // namespace anosov
