#include <doctest.h>

#include <random>

#include "anosov/int_matrix.hpp"
#include "anosov/polynomial.hpp"

using namespace anosov;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int n, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = dist(rng);
    return m;
}

// Independent determinant oracle: cofactor expansion.
Int det_cofactor(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a.at(0, 0);
    Int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a.at(0, j) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = a.at(r, c);
            }
        Int term = a.at(0, j) * det_cofactor(sub);
        total += (j % 2 == 0) ? term : Int(-term);
    }
    return total;
}

} // namespace

TEST_CASE("Bareiss determinant matches cofactor expansion") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        IntMatrix a = random_matrix(rng, n);
        CHECK(a.det() == det_cofactor(a));
    }
}

TEST_CASE("exterior power examples") {
    IntMatrix cat{{Int(2), Int(1)}, {Int(1), Int(1)}};
    CHECK(exterior_power(cat, 2) == IntMatrix{{Int(1)}});
    CHECK(exterior_power(IntMatrix::identity(3), 2) == IntMatrix::identity(3));

    IntMatrix diag{{Int(2), Int(0), Int(0)}, {Int(0), Int(3), Int(0)}, {Int(0), Int(0), Int(5)}};
    IntMatrix expected{{Int(6), Int(0), Int(0)}, {Int(0), Int(10), Int(0)}, {Int(0), Int(0), Int(15)}};
    CHECK(exterior_power(diag, 2) == expected);

    CHECK(exterior_power(cat, 0) == IntMatrix{{Int(1)}});
    CHECK_THROWS_AS(exterior_power(cat, 3), std::domain_error);
}

TEST_CASE("kronecker examples") {
    CHECK(kronecker(IntMatrix::identity(2), IntMatrix::identity(2)) == IntMatrix::identity(4));
    IntMatrix scalar{{Int(2)}};
    IntMatrix shear{{Int(1), Int(1)}, {Int(0), Int(1)}};
    CHECK(kronecker(scalar, shear) == IntMatrix{{Int(2), Int(2)}, {Int(0), Int(2)}});

    IntMatrix cat{{Int(2), Int(1)}, {Int(1), Int(1)}};
    IntMatrix kk = kronecker(cat, cat);
    CHECK(kk.trace() == 9);
    CHECK(kk.trace() == cat.trace() * cat.trace());
}

TEST_CASE("exterior and kronecker functoriality on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);  // up to 5
        IntMatrix a = random_matrix(rng, n, -3, 3);
        IntMatrix b = random_matrix(rng, n, -3, 3);
        for (int k = 0; k <= n; ++k)
            CHECK(exterior_power(a * b, k) == exterior_power(a, k) * exterior_power(b, k));

        IntMatrix c = random_matrix(rng, 2, -3, 3);
        IntMatrix d = random_matrix(rng, 2, -3, 3);
        CHECK(kronecker(a * b, c * d) == kronecker(a, c) * kronecker(b, d));
    }
}

TEST_CASE("alternating exterior trace sum equals det(I - A)") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);  // up to 6
        IntMatrix a = random_matrix(rng, n, -3, 3);
        Int alternating = 0;
        for (int k = 0; k <= n; ++k) {
            Int t = exterior_power(a, k).trace();
            alternating += (k % 2 == 0) ? t : Int(-t);
        }
        CHECK(alternating == (IntMatrix::identity(static_cast<std::size_t>(n)) - a).det());
    }
}

TEST_CASE("Smith normal form invariants") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        IntMatrix a = random_matrix(rng, n, -6, 6);
        auto snf = smith_normal_form(a);
        CHECK(snf.u * a * snf.v == snf.s);
        CHECK(abs_int(snf.u.det()) == 1);
        CHECK(abs_int(snf.v.det()) == 1);
        Int prod = 1;
        for (int i = 0; i < n; ++i) {
            const Int& di = snf.s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
            CHECK(di >= 0);
            if (i + 1 < n) {
                const Int& dj = snf.s.at(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i + 1));
                if (di != 0) CHECK(dj % di == 0);
                else CHECK(dj == 0);
            }
            prod *= di;
            for (int j = 0; j < n; ++j)
                if (i != j)
                    CHECK(snf.s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == 0);
        }
        CHECK(prod == abs_int(a.det()));
    }
}

TEST_CASE("integer kernel basis is a genuine saturated kernel") {
    IntMatrix a{{Int(1), Int(2), Int(3)}, {Int(2), Int(4), Int(6)}};
    IntMatrix k = integer_kernel_basis(a);
    CHECK(k.cols() == 2);
    IntMatrix prod = a * k;
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j) == 0);
    // Saturation: the Smith diagonal of the basis matrix is all ones.
    for (const auto& d : smith_diagonal(k)) CHECK(d == 1);
}

TEST_CASE("unimodular inverse is exact") {
    IntMatrix cat{{Int(2), Int(1)}, {Int(1), Int(1)}};
    IntMatrix inv = cat.inverse_unimodular();
    CHECK(cat * inv == IntMatrix::identity(2));
    CHECK(inv * cat == IntMatrix::identity(2));

    IntMatrix bad{{Int(2), Int(0)}, {Int(0), Int(1)}};
    CHECK_THROWS_AS(bad.inverse_unimodular(), std::domain_error);
}

TEST_CASE("matrix power") {
    IntMatrix cat{{Int(2), Int(1)}, {Int(1), Int(1)}};
    CHECK(cat.pow(0) == IntMatrix::identity(2));
    CHECK(cat.pow(3) == cat * cat * cat);
    CHECK(cat.pow(3).trace() == 18);
}
