#pragma once

#include <map>
#include <string>
#include <vector>

#include "anosov/graded_ring.hpp"
#include "anosov/int_matrix.hpp"

namespace anosov {

/// Images of ring generators as coordinate vectors over build_basis(ring,
/// generator.degree). Keyed by generator label.
struct GeneratorImages {
    std::map<std::string, std::vector<Int>> images;
};

/// A graded ring automorphism as one square integer matrix per degree.
/// Row convention throughout: f*(basis_d[i]) = sum_j M_d[i][j] basis_d[j],
/// matching the block-upper-triangular displays the splitting order yields.
/// Invariants: every M_d unimodular, M_0 = [1], M_top = [+-1].
struct GradedAutomorphism {
    std::vector<IntMatrix> degree_matrices;  // index d = 0..top_degree

    int top_degree() const { return static_cast<int>(degree_matrices.size()) - 1; }
    const IntMatrix& matrix(int d) const { return degree_matrices[static_cast<std::size_t>(d)]; }

    static GradedAutomorphism identity(const GradedRingDescription& ring);
};

/// Validates dimensions against the ring's Betti numbers and the
/// unimodularity/M_0/M_top invariants. Throws std::domain_error.
void validate_automorphism(const GradedRingDescription& ring, const GradedAutomorphism& aut);

/// Extends generator images multiplicatively over every basis monomial.
/// Verifies each generator relation (image^nilpotency = 0) and per-degree
/// unimodularity. Throws std::domain_error with the offending generator
/// ("not a ring map") or degree ("not invertible over Z").
GradedAutomorphism induce(const GradedRingDescription& ring, const GeneratorImages& images);

struct CupViolation {
    int d, e;            // degrees of the two factors
    int i, j;            // basis indices
    std::vector<Int> lhs;  // f*(b_i cup b_j) in basis coordinates of degree d+e
    std::vector<Int> rhs;  // f*(b_i) cup f*(b_j)
};

/// Empty iff the family respects the cup product on every basis pair.
std::vector<CupViolation> check_cup_preservation(const GradedRingDescription& ring,
                                                 const GradedAutomorphism& aut);

/// Entrywise matrix powers per degree; m >= 1.
GradedAutomorphism power(const GradedAutomorphism& aut, unsigned long m);

/// Poincare-duality compatibility: with sigma = M_top (+-1),
/// M_d * P_d * M_{top-d}^T == sigma * P_d for every degree, where P_d is the
/// intersection pairing. Equivalent to the complementary-degree matrix being
/// the inverse transpose up to the pairing change of basis.
bool duality_check(const GradedRingDescription& ring, const GradedAutomorphism& aut);

/// Constraint flags for the rank-2 middle-cohomology solver.
enum class DetConstraint { PlusOne, MinusOne, Both };
enum class OmegaConstraint { Fixed, AnySign };  // f* omega = +omega vs +-omega

/// All 2x2 integer matrices A = [[a,b],[c,d]] (rows are images: f*x = ax+by,
/// f*y = cx+dy) preserving the ring structure of the rank-2 middle cohomology
/// with x cup x = q*omega, y cup y = 0, x cup y = omega, subject to the
/// determinant and omega constraints.
///
/// The solution set is found by exact case analysis; completeness argument:
/// with w = omega sign and delta = det, subtracting the pairing equation from
/// the det equation yields c(aq + 2b) = w - delta. For w = delta this forces
/// c = 0 (else ad - bc = 0 contradicts the det equation), pinning a = +-1,
/// d = delta a, b = a q (w-1)/2; for w = -delta, c must divide 2w and
/// integrality eliminates all but |c| = 1 with q even. Every entry is then
/// bounded by max(1, |q|, q^2/4 + 1), which the brute-force oracle uses as
/// its certified sweep radius; in the pinned normalization (det +1, omega
/// fixed) the solutions are exactly +-Id for every q.
std::vector<IntMatrix> solve_rank2_middle(const Int& q, DetConstraint det_constraint,
                                          OmegaConstraint omega_constraint);

/// Independent oracle: exhaustive sweep over entries in [-bound, bound].
std::vector<IntMatrix> solve_rank2_middle_bruteforce(const Int& q, DetConstraint det_constraint,
                                                     OmegaConstraint omega_constraint,
                                                     int bound = 3);

} // namespace anosov
