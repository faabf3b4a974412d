#include "anosov/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace anosov {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer for IntMatrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum dimension mismatch");
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference dimension mismatch");
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
}

IntMatrix IntMatrix::scaled(const Int& s) const {
    IntMatrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
}

IntMatrix IntMatrix::pow(unsigned long k) const {
    if (!is_square()) throw std::invalid_argument("pow of non-square matrix");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        base = base * base;
        k >>= 1UL;
    }
    return result;
}

Int IntMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Int t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Int IntMatrix::det() const {
    if (!is_square()) throw std::invalid_argument("det of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination; every division below is exact.
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_unimodular() const {
    if (!is_square()) return false;
    Int d = det();
    return d == 1 || d == -1;
}

IntMatrix IntMatrix::inverse_unimodular() const {
    if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = rows_;
    Int d = det();
    if (d != 1 && d != -1)
        throw std::domain_error("matrix is not invertible over Z (det = " + d.str() + ")");
    // Gauss-Jordan over Q on [A | I]; the result is integral because det = +-1.
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(at(i, j));
        aug[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && aug[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix in inverse");
        std::swap(aug[col], aug[pivot]);
        Rat p = aug[col][col];
        for (auto& x : aug[col]) x /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Rat f = aug[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& x = aug[i][n + j];
            if (denominator(x) != 1)
                throw std::domain_error("inverse is not integral");
            inv.at(i, j) = numerator(x);
        }
    return inv;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < cols_; ++j) {
            os << at(i, j).str();
            if (j + 1 < cols_) os << ", ";
        }
        os << "]";
        if (i + 1 < rows_) os << ",\n";
    }
    os << "]";
    return os.str();
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Int& aij = a.at(i1, j1);
            if (aij == 0) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    out.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b.at(i2, j2);
        }
    return out;
}

std::vector<std::vector<int>> sorted_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

Int minor_det(const IntMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    IntMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub.at(i, j) = a.at(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
    return sub.det();
}

} // namespace

IntMatrix exterior_power(const IntMatrix& a, int k) {
    if (!a.is_square()) throw std::invalid_argument("exterior power of non-square matrix");
    const int n = static_cast<int>(a.rows());
    if (k < 0 || k > n) throw std::domain_error("exterior power index out of range");
    auto subsets = sorted_subsets(n, k);
    IntMatrix out(subsets.size(), subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = 0; j < subsets.size(); ++j)
            out.at(i, j) = minor_det(a, subsets[i], subsets[j]);
    return out;
}

SmithResult smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithResult r{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& s = r.s;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) std::swap(s.at(i, c), s.at(j, c));
        for (std::size_t c = 0; c < m; ++c) std::swap(r.u.at(i, c), r.u.at(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t rr = 0; rr < m; ++rr) std::swap(s.at(rr, i), s.at(rr, j));
        for (std::size_t rr = 0; rr < n; ++rr) std::swap(r.v.at(rr, i), r.v.at(rr, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t c = 0; c < n; ++c) s.at(dst, c) += f * s.at(src, c);
        for (std::size_t c = 0; c < m; ++c) r.u.at(dst, c) += f * r.u.at(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t rr = 0; rr < m; ++rr) s.at(rr, dst) += f * s.at(rr, src);
        for (std::size_t rr = 0; rr < n; ++rr) r.v.at(rr, dst) += f * r.v.at(rr, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < n; ++c) s.at(i, c) = -s.at(i, c);
        for (std::size_t c = 0; c < m; ++c) r.u.at(i, c) = -r.u.at(i, c);
    };

    // Quotient with minimal absolute remainder; keeps entry growth tame.
    auto round_div = [](const Int& a, const Int& b) {
        Int q = a / b;
        Int rem = a - q * b;
        Int half = abs_int(b);
        if (2 * abs_int(rem) > half) q += (rem > 0) == (b > 0) ? 1 : -1;
        return q;
    };

    std::size_t t = 0;
    bool block_exhausted = false;
    while (t < m && t < n && !block_exhausted) {
        while (true) {
            // Re-select the nonzero entry of least magnitude in the block;
            // remainders shrink below the pivot each round, so this
            // terminates and avoids coefficient blowup.
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const Int v = abs_int(s.at(i, j));
                    if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
                }
            if (best == 0) { block_exhausted = true; break; }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool residue = false;
            for (std::size_t i = t + 1; i < m; ++i)
                if (s.at(i, t) != 0) {
                    add_row(i, t, -round_div(s.at(i, t), s.at(t, t)));
                    if (s.at(i, t) != 0) residue = true;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (s.at(t, j) != 0) {
                    add_col(j, t, -round_div(s.at(t, j), s.at(t, t)));
                    if (s.at(t, j) != 0) residue = true;
                }
            if (!residue) break;
        }
        if (block_exhausted) break;
        if (s.at(t, t) < 0) negate_row(t);
        ++t;
    }

    // Enforce the divisibility chain d_i | d_{i+1} with the closed-form
    // Bezout transform: diag(a, b) = L^{-1} diag(g, ab/g) R^{-1} where
    // L = [[u, v], [-b/g, a/g]], R = [[1, -v b/g], [1, u a/g]] and
    // u a + v b = g. One exact step per offending pair.
    auto row_transform2 = [&](std::size_t i, std::size_t j, const Int& p, const Int& q,
                              const Int& rr2, const Int& s2) {
        for (std::size_t c = 0; c < n; ++c) {
            Int x = s.at(i, c), y = s.at(j, c);
            s.at(i, c) = p * x + q * y;
            s.at(j, c) = rr2 * x + s2 * y;
        }
        for (std::size_t c = 0; c < m; ++c) {
            Int x = r.u.at(i, c), y = r.u.at(j, c);
            r.u.at(i, c) = p * x + q * y;
            r.u.at(j, c) = rr2 * x + s2 * y;
        }
    };
    auto col_transform2 = [&](std::size_t i, std::size_t j, const Int& p, const Int& q,
                              const Int& rr2, const Int& s2) {
        // columns transform by right multiplication: col_i' = p col_i + rr2 col_j
        for (std::size_t row2 = 0; row2 < m; ++row2) {
            Int x = s.at(row2, i), y = s.at(row2, j);
            s.at(row2, i) = x * p + y * rr2;
            s.at(row2, j) = x * q + y * s2;
        }
        for (std::size_t row2 = 0; row2 < n; ++row2) {
            Int x = r.v.at(row2, i), y = r.v.at(row2, j);
            r.v.at(row2, i) = x * p + y * rr2;
            r.v.at(row2, j) = x * q + y * s2;
        }
    };
    auto bezout = [](const Int& a, const Int& b, Int& u, Int& v) -> Int {
        Int old_r = a, rr = b, old_u = 1, uu = 0, old_v = 0, vv = 1;
        while (rr != 0) {
            Int q = old_r / rr;
            Int tmp = old_r - q * rr; old_r = rr; rr = tmp;
            tmp = old_u - q * uu; old_u = uu; uu = tmp;
            tmp = old_v - q * vv; old_v = vv; vv = tmp;
        }
        u = old_u;
        v = old_v;
        return old_r;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < t; ++i) {
            Int a1 = s.at(i, i), a2 = s.at(i + 1, i + 1);
            if (a1 == 0 || a2 % a1 == 0) continue;
            Int u, v;
            Int g = bezout(a1, a2, u, v);
            row_transform2(i, i + 1, u, v, -a2 / g, a1 / g);
            col_transform2(i, i + 1, Int(1), -v * (a2 / g), Int(1), u * (a1 / g));
            if (s.at(i, i) < 0) negate_row(i);
            if (s.at(i + 1, i + 1) < 0) negate_row(i + 1);
            changed = true;
        }
    }
    for (std::size_t i = 0; i < t; ++i)
        if (s.at(i, i) < 0) negate_row(i);
    return r;
}

std::vector<Int> smith_diagonal(const IntMatrix& a) {
    auto r = smith_normal_form(a);
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) d.push_back(r.s.at(i, i));
    return d;
}

IntMatrix integer_kernel_basis(const IntMatrix& a) {
    auto r = smith_normal_form(a);
    const std::size_t n = a.cols();
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = j >= a.rows() || r.s.at(j, j) == 0;
        if (zero) zero_cols.push_back(j);
    }
    // U A V = S, so A * (V e_j) = 0 exactly for the zero diagonal columns.
    IntMatrix out(n, zero_cols.size());
    for (std::size_t k = 0; k < zero_cols.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) out.at(i, k) = r.v.at(i, zero_cols[k]);
    return out;
}

std::size_t rational_rank(const IntMatrix& a) {
    auto d = smith_diagonal(a);
    std::size_t rank = 0;
    for (const auto& x : d)
        if (x != 0) ++rank;
    return rank;
}

IntMatrix solve_exact(const IntMatrix& b, const IntMatrix& c, bool require_integral) {
    if (b.rows() != c.rows()) throw std::invalid_argument("solve: row mismatch");
    const std::size_t m = b.rows(), n = b.cols(), k = c.cols();
    std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(n + k));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(b.at(i, j));
        for (std::size_t j = 0; j < k; ++j) aug[i][n + j] = Rat(c.at(i, j));
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_of_col(n, SIZE_MAX);
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && aug[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(aug[row], aug[p]);
        Rat piv = aug[row][col];
        for (auto& x : aug[row]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rat f = aug[i][col];
            for (std::size_t j = 0; j < n + k; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    if (row < n) throw std::domain_error("solve: coefficient matrix is rank-deficient");
    for (std::size_t i = row; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (aug[i][n + j] != 0) throw std::domain_error("solve: inconsistent system");
    IntMatrix x(n, k);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = pivot_of_col[col];
        for (std::size_t j = 0; j < k; ++j) {
            const Rat& v = aug[pr][n + j];
            if (denominator(v) != 1) {
                if (require_integral)
                    throw std::domain_error("solve: solution is not integral");
                throw std::domain_error("solve: non-integral solution; IntMatrix cannot hold it");
            }
            x.at(col, j) = numerator(v);
        }
    }
    return x;
}

} // namespace anosov
