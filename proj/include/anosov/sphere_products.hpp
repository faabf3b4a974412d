#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anosov/automorphism.hpp"
#include "anosov/graded_ring.hpp"
#include "anosov/lefschetz.hpp"

namespace anosov {

/// A finite product of spheres (S^{d_1})^{n_1} x ... x (S^{d_m})^{n_m},
/// d_1 < d_2 < ... < d_m.
struct SphereProductSpec {
    struct Factor {
        int dim;    // sphere dimension d_p
        int count;  // multiplicity n_p
    };
    std::vector<Factor> factors;

    void validate() const;
    int dimension() const;              // dim M = sum n_p d_p
    int even_generator_total() const;   // e = sum of n_p over even d_p
    GradedRingDescription to_ring() const;
};

/// A splitting of a degree d over the sphere factors: alpha_p in [0, n_p]
/// with sum alpha_p d_p = d. Odd splittings avoid all even-dimensional
/// factors; their parity is the parity of any degree where the block occurs.
struct Splitting {
    std::vector<int> alpha;
    int degree = 0;
    bool is_odd = false;   // alpha_p = 0 for every even d_p
    int parity = 0;        // degree mod 2

    bool operator==(const Splitting& other) const { return alpha == other.alpha; }
};

/// All splittings of d, ascending in the first-difference order
/// (alpha < beta iff alpha_p < beta_p at the first differing p).
std::vector<Splitting> enumerate_splittings(const SphereProductSpec& spec, int d);

/// Generator blocks A_p for the odd sphere dimensions, keyed by dimension.
/// Even-dimensional blocks are the identity (finite-power reduction).
struct GeneratorBlocks {
    std::map<int, IntMatrix> by_dim;

    void validate(const SphereProductSpec& spec) const;
};

/// B(alpha): Kronecker product over odd dimensions (ascending) of the
/// alpha_p-th exterior powers of the generator blocks. A purely even
/// splitting gives the 1x1 identity.
IntMatrix block(const SphereProductSpec& spec, const GeneratorBlocks& blocks,
                const Splitting& splitting);

/// Symbolic label of B(alpha), e.g. "A1(x)A3" or "A1^2" (wedge squares);
/// "Id" for even splittings.
std::string block_label(const SphereProductSpec& spec, const Splitting& splitting);

struct BlockEntry {
    Splitting splitting;
    IntMatrix matrix;      // B(alpha)
    Int multiplicity;      // product of C(n_p, alpha_p) over even d_p
    std::string label;
};

/// Per-degree ordered diagonal blocks of the induced maps, with the global
/// count invariants checked: every odd-part block appears exactly 2^e times
/// across all degrees and all its appearances share the degree parity.
struct BlockDecomposition {
    std::vector<std::vector<BlockEntry>> per_degree;  // index d = 0..dim
    int even_generator_total = 0;

    Int dimension_at(int d) const;  // sum of multiplicity * block size
};

BlockDecomposition block_table(const SphereProductSpec& spec, const GeneratorBlocks& blocks);

/// Minimal l >= 1 such that the l-th power of the automorphism fixes every
/// even-degree generator class modulo the filtration (i.e. the generator
/// sub-block of M_{d_p}^l is the identity for every even d_p). Errors past
/// the 2 * (max n_p)! * 2^{sum n_p} search cap, which would contradict the
/// finite-order property of even generator blocks.
long even_generator_order(const SphereProductSpec& spec, const GradedAutomorphism& aut);

/// True iff every degree matrix is block-upper-triangular with respect to
/// the splitting filtration (rows/columns ordered by the canonical basis).
bool filtration_invariance_test(const SphereProductSpec& spec, const GradedAutomorphism& aut);

/// Assembles the block-diagonal graded family from the block table. Traces
/// (hence Lefschetz numbers) agree with any automorphism realizing these
/// generator blocks, because the full matrices are block-upper-triangular.
GradedAutomorphism assemble_block_diagonal(const SphereProductSpec& spec,
                                           const GeneratorBlocks& blocks);

struct Theorem16Result {
    bool applicable = false;       // needs e >= 1
    GrowthVerdict growth;          // cascade over the odd-splitting blocks
    Int leading_coefficient = 0;   // 2^e * |w| when growth found
    Int even_power = 0;            // 2^e
    std::string verdict;           // human-readable conclusion
    bool excludes_transitive = false;
    bool excludes_all = false;     // bounded case: no Anosov-compatible growth
};

/// Growth analysis for a product with at least one even-dimensional sphere:
/// the leading coefficient of |Fix| carries the factor 2^e, so it can never
/// be 1. Even-dimensional generator blocks are taken as identity (the
/// finite-power reduction recorded in the result notes).
Theorem16Result theorem16_check(const SphereProductSpec& spec, const GeneratorBlocks& blocks);

struct Theorem17Result {
    int odd_dim_once = 0;                 // the k
    bool pairing_verified = false;        // blockwise cancellation checked structurally
    std::vector<Int> sequence_generic;    // exact Lambda via traces
    std::vector<Int> sequence_pairing;    // via the paired-splitting cancellation path
    std::string verdict;
};

/// For a product where some odd dimension k appears exactly once: matches
/// the splittings without the k-factor to those with it and verifies the
/// blockwise cancellation, then cross-checks the generic exact sequence.
/// Throws std::domain_error if the hypothesis fails.
Theorem17Result theorem17_check(const SphereProductSpec& spec, const GeneratorBlocks& blocks,
                                int k, unsigned long max_l = 20);

} // namespace anosov
