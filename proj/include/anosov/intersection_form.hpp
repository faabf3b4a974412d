#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anosov/exact.hpp"
#include "anosov/int_matrix.hpp"

namespace anosov {

/// Symmetric integral form with determinant +-1.
struct UnimodularForm {
    IntMatrix q;

    explicit UnimodularForm(IntMatrix matrix);
    std::size_t rank() const { return q.rows(); }

    /// Exact signature (positives, negatives) via symmetric congruence
    /// diagonalization over Q.
    std::pair<int, int> signature() const;
    bool is_definite() const;
};

enum class Completeness { Certified, BoundedOnly };

struct IsometryList {
    std::vector<IntMatrix> elements;  // A with A^T Q A = Q, det A = 1
    Completeness completeness = Completeness::BoundedOnly;
    long entry_bound = 0;  // the sweep bound when BoundedOnly
};

/// SO(Q;Z) up to the stated completeness:
///  - N = 1 and N = 2: closed form (automorphs of a binary form via
///    t^2 - D u^2 = 4, D = -4 det Q), CERTIFIED for any unimodular Q;
///  - definite Q: column-norm-bounded enumeration, CERTIFIED;
///  - indefinite N >= 3: backtracking sweep over |entries| <= entry_bound,
///    BOUNDED_ONLY (the group can be infinite).
/// Elements are sorted canonically: |trace| descending, trace descending,
/// then flattened entries ascending; this puts Id first and matches the
/// conventional listing of the rank-2 groups.
IsometryList enumerate_isometries(const UnimodularForm& form, long entry_bound = 3);

struct StabilizedPower {
    long exponent = 1;          // least m with no root-of-unity eigenvalue != 1 in A^m
    IntMatrix power;            // A^m
    std::vector<int> cyclotomic_orders;  // orders k > 1 found in charpoly(A)
};

/// Least m >= 1 such that A^m has no eigenvalue that is a root of unity
/// other than 1: the lcm of the orders of the cyclotomic factors of the
/// characteristic polynomial.
StabilizedPower power_stabilize(const IntMatrix& a);

struct FixedSplit {
    long fixed_dim = 0;         // dim V, the eigenvalue-1 subspace
    long k = 0;                 // dim V_perp
    IntMatrix v_basis;          // columns: saturated basis of V cap Z^N
    IntMatrix vperp_basis;      // columns: saturated basis of V_perp cap Z^N
    IntMatrix q_prime;          // Q restricted to V_perp
    IntMatrix q_second;         // Q restricted to V
    IntMatrix a_prime;          // restriction of A to V_perp
    bool unimodular_split = false;  // Z^N = V (+) V_perp
    bool aprime_has_root_of_unity = false;  // set when A was not stabilized first
};

/// Splits off the eigenvalue-1 subspace of a stabilized isometry.
/// Throws std::runtime_error("non-split Jordan block...") when the
/// eigenvalue-1 part of A is not semisimple (the splitting the argument
/// needs does not exist; reported rather than patched).
FixedSplit fixed_subspace_split(const IntMatrix& a, const UnimodularForm& form);

/// 2 + Tr(A^l) for l = 1..L, exact.
std::vector<Int> eq71_sequence(const IntMatrix& a, unsigned long max_l);

struct ConstraintStep {
    std::string constraint;
    std::string status;
    std::string citation;
};

struct Theorem110Result {
    std::string conclusion;  // "NO_ANOSOV" or "INCONCLUSIVE"
    std::vector<ConstraintStep> chain;
    std::vector<IntMatrix> candidates;  // admissible isometries found in the sweep
    bool bounded_only = false;          // sweep-based caveat on INCONCLUSIVE
    std::pair<int, int> signature{0, 0};
};

/// Decides whether a (2n-1)-connected 4n-manifold with intersection form Q
/// and middle Betti number N can support an Anosov diffeomorphism:
/// definite forms short-circuit through the finiteness of SO(Q;R)-compactness;
/// otherwise an admissible stabilized isometry needs k = dim V_perp even,
/// k >= 4 (the rank-2 groups are finite), and N - k >= 1 when the Euler
/// characteristic is nonzero. Unsatisfiable constraints give NO_ANOSOV.
Theorem110Result theorem110_check(const UnimodularForm& form, bool chi_nonzero,
                                  long search_bound = 3);

/// The four canonical rank-2 forms.
const IntMatrix& canonical_rank2_form(int which);  // 1..4

/// Plain-text rendering of the four rank-2 isometry groups.
std::string render_section7_tables();

} // namespace anosov
