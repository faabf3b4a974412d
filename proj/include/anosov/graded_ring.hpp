#pragma once

#include <map>
#include <string>
#include <vector>

#include "anosov/exact.hpp"
#include "anosov/int_matrix.hpp"

namespace anosov {

/// One multiplicative generator of a graded-commutative ring over Z.
/// nilpotency is the power at which it vanishes: 2 for sphere classes,
/// n+1 for the degree-2 class of CP^n. Odd-degree generators square to
/// zero by graded commutativity, so nilpotency > 2 requires even degree.
struct Generator {
    std::string label;
    int degree = 1;
    int nilpotency = 2;
};

/// A graded-commutative ring Z[x_1,...]/(x_i^{nilpotency_i}).
/// Generators are listed grouped by degree with degrees non-decreasing;
/// consecutive equal-degree generators form a "degree group". The group
/// structure drives the canonical basis order (splittings).
class GradedRingDescription {
public:
    GradedRingDescription() = default;
    explicit GradedRingDescription(std::vector<Generator> generators);

    const std::vector<Generator>& generators() const { return generators_; }
    int top_degree() const { return top_degree_; }

    struct DegreeGroup {
        int degree;        // common degree of the group's generators
        int first;         // index of the first generator in the group
        int count;         // number of generators
        int weight_cap;    // sum of (nilpotency - 1) over the group
    };
    const std::vector<DegreeGroup>& groups() const { return groups_; }

    int generator_index(const std::string& label) const;  // -1 if absent

private:
    std::vector<Generator> generators_;
    std::vector<DegreeGroup> groups_;
    int top_degree_ = 0;
};

/// A basis monomial: one exponent per ring generator, each strictly below
/// that generator's nilpotency. The zero-exponent-omitted map form exists
/// only in the JSON layer; internally the vector stays dense and aligned
/// with the generator list.
struct Monomial {
    std::vector<int> exponents;

    bool operator==(const Monomial& other) const = default;
    bool is_unit() const;
    int degree(const GradedRingDescription& ring) const;
    std::string to_string(const GradedRingDescription& ring) const;
};

/// Result of a cup product: zero, or +-1 times a basis monomial.
struct SignedMonomial {
    bool zero = true;
    int sign = 1;  // meaningless when zero
    Monomial monomial;

    static SignedMonomial make_zero() { return SignedMonomial{}; }
};

/// Ordered monomial basis of H^d. Blocks follow the splitting order
/// (group-weight vectors compared entrywise, first difference decides,
/// smaller first); inside a block, monomials are ordered by their
/// index-with-multiplicity tuples lexicographically. On pure sphere
/// products this is the classical ordering of the wedge basis.
std::vector<Monomial> build_basis(const GradedRingDescription& ring, int d);

/// Cup product of two basis monomials. Zero as soon as a combined exponent
/// reaches a nilpotency; otherwise merges the exponents with the Koszul
/// sign given by the parity of odd-odd generator transpositions needed to
/// interleave the factors into canonical order.
SignedMonomial cup(const GradedRingDescription& ring, const Monomial& a, const Monomial& b);

int betti(const GradedRingDescription& ring, int d);
Int euler_characteristic(const GradedRingDescription& ring);

/// Splitting (group-weight) vector of a monomial.
std::vector<int> monomial_splitting(const GradedRingDescription& ring, const Monomial& m);

/// Poincare pairing matrix at degree d:
/// P[i][j] = coefficient of the top monomial in basis_d[i] cup basis_{top-d}[j].
IntMatrix intersection_pairing(const GradedRingDescription& ring, int d);

/// Unique top-degree monomial (all exponents maximal).
Monomial top_monomial(const GradedRingDescription& ring);

/// Cached bases with index lookup; rebuildable from the ring alone.
class BasisTable {
public:
    explicit BasisTable(const GradedRingDescription& ring);

    const GradedRingDescription& ring() const { return *ring_; }
    const std::vector<Monomial>& basis(int d) const;
    int index_of(int d, const Monomial& m) const;  // -1 if absent
    int betti(int d) const { return static_cast<int>(basis(d).size()); }

private:
    const GradedRingDescription* ring_;
    std::vector<std::vector<Monomial>> bases_;
    std::vector<std::map<std::vector<int>, int>> index_;
};

// ---- standard ring builders ----

/// (S^1)^n.
GradedRingDescription torus_ring(int n);

/// Product of spheres given as (dimension, multiplicity) pairs with
/// strictly increasing dimensions.
GradedRingDescription sphere_product_ring(const std::vector<std::pair<int, int>>& factors);

/// CP^n (one degree-2 generator with nilpotency n+1).
GradedRingDescription projective_space_ring(int n);

/// Tensor product of ring descriptions (generators merged, regrouped by
/// degree). Labels are regenerated canonically.
GradedRingDescription ring_product(const GradedRingDescription& a, const GradedRingDescription& b);

} // namespace anosov
