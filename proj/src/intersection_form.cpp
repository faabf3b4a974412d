#include "anosov/intersection_form.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "anosov/polynomial.hpp"

namespace anosov {

UnimodularForm::UnimodularForm(IntMatrix matrix) : q(std::move(matrix)) {
    if (!q.is_square() || !q.is_symmetric())
        throw std::domain_error("intersection form must be a symmetric square matrix");
    Int d = q.det();
    if (d != 1 && d != -1)
        throw std::domain_error("intersection form must be unimodular (det = " + d.str() + ")");
}

std::pair<int, int> UnimodularForm::signature() const {
    const std::size_t n = q.rows();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(q.at(i, j));
    int pos = 0, neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_i = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m[i][i] != 0) { swap_i = i; break; }
            if (swap_i != k) {
                std::swap(m[k], m[swap_i]);
                for (std::size_t r = 0; r < n; ++r) std::swap(m[r][k], m[r][swap_i]);
            }
        }
        if (m[k][k] == 0) {
            // All remaining diagonal zero; pull a nonzero off-diagonal onto it.
            std::size_t j = k;
            for (std::size_t c = k + 1; c < n; ++c)
                if (m[k][c] != 0) { j = c; break; }
            if (j == k) continue;  // zero row: degenerate (cannot happen, det = +-1)
            for (std::size_t c = 0; c < n; ++c) m[k][c] += m[j][c];
            for (std::size_t r = 0; r < n; ++r) m[r][k] += m[r][j];
        }
        const Rat pivot = m[k][k];
        if (pivot > 0) ++pos;
        else ++neg;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / pivot;
            for (std::size_t c = 0; c < n; ++c) m[i][c] -= f * m[k][c];
            for (std::size_t r = 0; r < n; ++r) m[r][i] -= f * m[r][k];
        }
    }
    return {pos, neg};
}

bool UnimodularForm::is_definite() const {
    auto [p, n] = signature();
    return p == 0 || n == 0;
}

namespace {

Int form_value(const IntMatrix& q, const std::vector<Int>& u, const std::vector<Int>& v) {
    Int total = 0;
    for (std::size_t i = 0; i < q.rows(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < q.cols(); ++j)
            if (v[j] != 0) total += u[i] * q.at(i, j) * v[j];
    }
    return total;
}

void sort_canonically(std::vector<IntMatrix>& mats) {
    auto key_less = [](const IntMatrix& x, const IntMatrix& y) {
        Int tx = x.trace(), ty = y.trace();
        Int ax = abs_int(tx), ay = abs_int(ty);
        if (ax != ay) return ax > ay;
        if (tx != ty) return tx > ty;
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j)
                if (x.at(i, j) != y.at(i, j)) return x.at(i, j) < y.at(i, j);
        return false;
    };
    std::sort(mats.begin(), mats.end(), key_less);
}

// Closed form for N = 2: the proper automorphs of the binary form
// alpha x^2 + 2 beta xy + gamma y^2 correspond to integer solutions of
// t^2 - D u^2 = 4 with D = 4(beta^2 - alpha gamma) = -4 det Q.
// det Q = +1 gives D = -4: (t,u) = (+-2,0),(0,+-1) -> four elements.
// det Q = -1 gives D = +4: t^2 - 4u^2 = 4 forces u = 0 -> {+-Id}.
std::vector<IntMatrix> isometries_rank2(const IntMatrix& q) {
    const Int alpha = q.at(0, 0), beta = q.at(0, 1), gamma = q.at(1, 1);
    std::vector<IntMatrix> out;
    out.push_back(IntMatrix::identity(2));
    out.push_back(-IntMatrix::identity(2));
    if (alpha * gamma - beta * beta == 1) {
        IntMatrix r{{-beta, -gamma}, {alpha, beta}};
        out.push_back(r);
        out.push_back(-r);
    }
    return out;
}

// Candidate columns v with v^T P v = target and |v_i| within the bound the
// positive-definite form imposes: v_i^2 <= target * (P^{-1})_{ii}.
std::vector<std::vector<Int>> definite_norm_vectors(const IntMatrix& p, const Int& target) {
    const std::size_t n = p.rows();
    // (P^{-1})_{ii} = adj_ii / det; both exact.
    Int det = p.det();
    std::vector<double> inv_diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Cofactor: delete row/col i.
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
            if (r == i) continue;
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == i) continue;
                sub.at(rr, cc) = p.at(r, c);
                ++cc;
            }
            ++rr;
        }
        inv_diag[i] = to_double(sub.det()) / to_double(det);
    }
    std::vector<long> bounds(n);
    for (std::size_t i = 0; i < n; ++i)
        bounds[i] = static_cast<long>(std::floor(std::sqrt(
                        std::max(0.0, to_double(target) * inv_diag[i]) + 1e-9))) + 1;

    std::vector<std::vector<Int>> out;
    std::vector<Int> v(n);
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (form_value(p, v, v) == target) out.push_back(v);
            return;
        }
        for (long x = -bounds[i]; x <= bounds[i]; ++x) {
            v[i] = x;
            self(self, i + 1);
        }
        v[i] = 0;
    };
    recurse(recurse, 0);
    return out;
}

std::vector<IntMatrix> isometries_definite(const IntMatrix& q) {
    // Negating Q does not change its isometries.
    IntMatrix p = q;
    if (p.at(0, 0) < 0) p = -p;
    const std::size_t n = p.rows();

    std::vector<std::vector<std::vector<Int>>> candidates(n);
    for (std::size_t j = 0; j < n; ++j) candidates[j] = definite_norm_vectors(p, p.at(j, j));

    std::vector<IntMatrix> out;
    std::vector<std::vector<Int>> cols;
    auto recurse = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            IntMatrix a(n, n);
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t r = 0; r < n; ++r) a.at(r, c) = cols[c][r];
            if (a.det() == 1) out.push_back(std::move(a));
            return;
        }
        for (const auto& v : candidates[j]) {
            bool ok = true;
            for (std::size_t i = 0; i < j && ok; ++i)
                if (form_value(p, cols[i], v) != p.at(i, j)) ok = false;
            if (!ok) continue;
            cols.push_back(v);
            self(self, j + 1);
            cols.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

std::vector<IntMatrix> isometries_bounded_sweep(const IntMatrix& q, long bound) {
    const std::size_t n = q.rows();
    // Pool of columns satisfying the diagonal constraint, per column index.
    std::vector<std::vector<std::vector<Int>>> candidates(n);
    std::vector<Int> v(n);
    auto fill = [&](auto&& self, std::size_t i, std::size_t target_col) -> void {
        if (i == n) {
            if (form_value(q, v, v) == q.at(target_col, target_col))
                candidates[target_col].push_back(v);
            return;
        }
        for (long x = -bound; x <= bound; ++x) {
            v[i] = x;
            self(self, i + 1, target_col);
        }
        v[i] = 0;
    };
    for (std::size_t j = 0; j < n; ++j) {
        // Columns with equal diagonal entries share the pool.
        bool copied = false;
        for (std::size_t prev = 0; prev < j; ++prev)
            if (q.at(prev, prev) == q.at(j, j)) {
                candidates[j] = candidates[prev];
                copied = true;
                break;
            }
        if (!copied) fill(fill, 0, j);
    }

    std::vector<IntMatrix> out;
    std::vector<const std::vector<Int>*> cols;
    auto recurse = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            IntMatrix a(n, n);
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t r = 0; r < n; ++r) a.at(r, c) = (*cols[c])[r];
            if (a.det() == 1) out.push_back(std::move(a));
            return;
        }
        for (const auto& cand : candidates[j]) {
            bool ok = true;
            for (std::size_t i = 0; i < j && ok; ++i)
                if (form_value(q, *cols[i], cand) != q.at(i, j)) ok = false;
            if (!ok) continue;
            cols.push_back(&cand);
            self(self, j + 1);
            cols.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

} // namespace

IsometryList enumerate_isometries(const UnimodularForm& form, long entry_bound) {
    const IntMatrix& q = form.q;
    IsometryList list;
    if (form.rank() == 0) {
        list.completeness = Completeness::Certified;
        return list;
    }
    if (form.rank() == 1) {
        list.elements.push_back(IntMatrix::identity(1));
        list.completeness = Completeness::Certified;
    } else if (form.rank() == 2) {
        list.elements = isometries_rank2(q);
        list.completeness = Completeness::Certified;
    } else if (form.is_definite()) {
        list.elements = isometries_definite(q);
        list.completeness = Completeness::Certified;
    } else {
        list.elements = isometries_bounded_sweep(q, entry_bound);
        list.completeness = Completeness::BoundedOnly;
        list.entry_bound = entry_bound;
    }
    // Defensive exactness check on every returned element.
    for (const auto& a : list.elements)
        if (!(a.transpose() * q * a == q) || a.det() != 1)
            throw std::logic_error("isometry enumeration produced a non-isometry");
    sort_canonically(list.elements);
    return list;
}

StabilizedPower power_stabilize(const IntMatrix& a) {
    if (!a.is_square() || !a.is_unimodular())
        throw std::domain_error("power_stabilize needs a matrix in GL(N,Z)");
    StabilizedPower out;
    IntPoly p = charpoly(a);
    long m = 1;
    for (int k : cyclotomic_factor_orders(p)) {
        if (k == 1) continue;  // eigenvalue 1 is allowed to stay
        out.cyclotomic_orders.push_back(k);
        m = std::lcm(m, static_cast<long>(k));
    }
    out.exponent = m;
    out.power = a.pow(static_cast<unsigned long>(m));
    return out;
}

FixedSplit fixed_subspace_split(const IntMatrix& a, const UnimodularForm& form) {
    const std::size_t n = form.rank();
    if (a.rows() != n || a.cols() != n)
        throw std::domain_error("isometry size does not match the form");

    IntMatrix a_minus_i = a - IntMatrix::identity(n);
    // Semisimplicity at eigenvalue 1: ker(A-I) must equal ker((A-I)^2).
    if (rational_rank(a_minus_i) != rational_rank(a_minus_i * a_minus_i))
        throw std::runtime_error(
            "non-split Jordan block at eigenvalue 1: the orthogonal splitting does not exist");

    FixedSplit split;
    split.v_basis = integer_kernel_basis(a_minus_i);
    split.fixed_dim = static_cast<long>(split.v_basis.cols());

    // V_perp = kernel of (basis_V)^T Q, a saturated sublattice.
    split.vperp_basis = integer_kernel_basis(split.v_basis.transpose() * form.q);
    split.k = static_cast<long>(split.vperp_basis.cols());

    split.q_prime = split.vperp_basis.transpose() * form.q * split.vperp_basis;
    split.q_second = split.v_basis.transpose() * form.q * split.v_basis;

    if (split.k > 0) {
        split.a_prime = solve_exact(split.vperp_basis, a * split.vperp_basis, true);
        if (!(split.a_prime.transpose() * split.q_prime * split.a_prime == split.q_prime))
            throw std::logic_error("restriction is not an isometry of Q'");
        // A stabilized input has none of these; a raw input may, and the
        // caller detects them through power_stabilize.
        split.aprime_has_root_of_unity =
            !cyclotomic_factor_orders(charpoly(split.a_prime)).empty();
    } else {
        split.a_prime = IntMatrix(0, 0);
    }
    if (split.fixed_dim + split.k == static_cast<long>(n)) {
        Int dp = split.k > 0 ? split.q_prime.det() : Int(1);
        Int ds = split.fixed_dim > 0 ? split.q_second.det() : Int(1);
        split.unimodular_split = abs_int(dp * ds) == 1;
    }
    if (!a.is_identity()) {
        if (split.k == 0) throw std::logic_error("nontrivial stabilized isometry with k = 0");
        if (split.k % 2 != 0)
            throw std::logic_error("k must be even (eigenvalues pair up as lambda, 1/lambda)");
    }
    return split;
}

std::vector<Int> eq71_sequence(const IntMatrix& a, unsigned long max_l) {
    std::vector<Int> out;
    IntMatrix p = a;
    for (unsigned long l = 1; l <= max_l; ++l) {
        out.push_back(Int(2) + p.trace());
        if (l < max_l) p = p * a;
    }
    return out;
}

const IntMatrix& canonical_rank2_form(int which) {
    static const IntMatrix q1{{Int(1), Int(0)}, {Int(0), Int(1)}};
    static const IntMatrix q2{{Int(-1), Int(0)}, {Int(0), Int(-1)}};
    static const IntMatrix q3{{Int(1), Int(0)}, {Int(0), Int(-1)}};
    static const IntMatrix q4{{Int(0), Int(1)}, {Int(1), Int(0)}};
    switch (which) {
        case 1: return q1;
        case 2: return q2;
        case 3: return q3;
        case 4: return q4;
    }
    throw std::domain_error("canonical rank-2 form index must be 1..4");
}

Theorem110Result theorem110_check(const UnimodularForm& form, bool chi_nonzero,
                                  long search_bound) {
    Theorem110Result result;
    const long n = static_cast<long>(form.rank());
    result.signature = form.signature();

    if (form.is_definite()) {
        result.conclusion = "NO_ANOSOV";
        result.chain.push_back(
            {"Q definite", "SO(Q;R) is compact, so SO(Q;Z) is finite and every isometry has "
                           "finite order; 2 + Tr(A^l) cannot grow",
             "definite-form finiteness"});
        if (n <= 4) {
            auto group = enumerate_isometries(form);
            result.chain.push_back({"SO(Q;Z) enumerated",
                                    std::to_string(group.elements.size()) +
                                        " elements (certified complete)",
                                    "column-norm bounded enumeration"});
        }
        return result;
    }

    // Constraints on k = dim V_perp of an admissible stabilized isometry.
    result.chain.push_back({"growth", "an Anosov diffeomorphism forces an eigenvalue of modulus "
                                      "> 1, so k >= 1",
                            "fixed-point growth (2 + Tr(A^l))"});
    result.chain.push_back({"k even", "eigenvalues of the restriction pair up as lambda, 1/lambda",
                            "duality pairing"});
    result.chain.push_back({"k >= 4",
                            "every rank-2 unimodular isometry group is {+-Id} or the four "
                            "matrices above; all have root-of-unity eigenvalues only",
                            "rank-2 enumeration tables"});
    long max_k = chi_nonzero ? n - 1 : n;
    if (chi_nonzero)
        result.chain.push_back({"N - k >= 1",
                                "nonzero Euler characteristic forces an eigenvalue-1 direction",
                                "characteristic-class constraint"});

    bool satisfiable = false;
    for (long k = 4; k <= max_k; k += 2) satisfiable = true;
    if (!satisfiable) {
        result.conclusion = "NO_ANOSOV";
        result.chain.push_back({"conclusion",
                                "no even k with 4 <= k <= " + std::to_string(max_k) +
                                    " exists at N = " + std::to_string(n),
                                "constraint chain unsatisfiable"});
        return result;
    }

    // Constraints are satisfiable; look for explicit admissible candidates
    // within the sweep bound. Absence of candidates proves nothing here.
    result.conclusion = "INCONCLUSIVE";
    result.bounded_only = true;
    long admissible_count = 0;
    auto list = enumerate_isometries(form, search_bound);
    for (const auto& a : list.elements) {
        auto stab = power_stabilize(a);
        if (stab.power.is_identity()) continue;
        // Growth requires an eigenvalue off the unit circle; quasi-unipotent
        // survivors of the stabilization have none.
        if (all_roots_of_unity(charpoly(stab.power))) continue;
        try {
            auto split = fixed_subspace_split(stab.power, form);
            if (split.k >= 4 && split.k % 2 == 0 && (!chi_nonzero || n - split.k >= 1)) {
                ++admissible_count;
                if (result.candidates.size() < 8) result.candidates.push_back(a);
            }
        } catch (const std::runtime_error&) {
            // non-split Jordan block: not admissible for the splitting argument
        }
    }
    result.chain.push_back({"search",
                            std::to_string(admissible_count) +
                                " admissible candidate(s) within entry bound " +
                                std::to_string(search_bound) + " (sweep is not exhaustive; first " +
                                std::to_string(result.candidates.size()) + " retained)",
                            "bounded enumeration"});
    return result;
}

std::string render_section7_tables() {
    std::ostringstream os;
    const char* names[4] = {"Q1 = [[1,0],[0,1]]", "Q2 = [[-1,0],[0,-1]]", "Q3 = [[1,0],[0,-1]]",
                            "Q4 = [[0,1],[1,0]]"};
    for (int which = 1; which <= 4; ++which) {
        UnimodularForm form(canonical_rank2_form(which));
        auto list = enumerate_isometries(form);
        os << "SO(" << names[which - 1] << "; Z):\n";
        for (const auto& a : list.elements) {
            os << "  [" << a.at(0, 0).str() << " " << a.at(0, 1).str() << "; " << a.at(1, 0).str()
               << " " << a.at(1, 1).str() << "]\n";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace anosov
