#include "anosov/sphere_products.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace anosov {

namespace {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// First-difference splitting order: alpha < beta iff alpha_p < beta_p at the
// first differing p.
bool splitting_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

void SphereProductSpec::validate() const {
    if (factors.empty()) throw std::domain_error("sphere product needs at least one factor");
    int prev = 0;
    for (const auto& f : factors) {
        if (f.dim <= prev)
            throw std::domain_error("sphere dimensions must be strictly increasing and >= 1");
        if (f.count < 1) throw std::domain_error("sphere multiplicity must be >= 1");
        prev = f.dim;
    }
}

int SphereProductSpec::dimension() const {
    int d = 0;
    for (const auto& f : factors) d += f.dim * f.count;
    return d;
}

int SphereProductSpec::even_generator_total() const {
    int e = 0;
    for (const auto& f : factors)
        if (f.dim % 2 == 0) e += f.count;
    return e;
}

GradedRingDescription SphereProductSpec::to_ring() const {
    validate();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& f : factors) pairs.emplace_back(f.dim, f.count);
    return sphere_product_ring(pairs);
}

std::vector<Splitting> enumerate_splittings(const SphereProductSpec& spec, int d) {
    spec.validate();
    if (d < 0 || d > spec.dimension()) throw std::domain_error("degree out of range");
    std::vector<Splitting> out;
    std::vector<int> alpha;
    auto recurse = [&](auto&& self, std::size_t p, int remaining) -> void {
        if (p == spec.factors.size()) {
            if (remaining != 0) return;
            Splitting s;
            s.alpha = alpha;
            s.degree = d;
            s.is_odd = true;
            for (std::size_t i = 0; i < alpha.size(); ++i)
                if (spec.factors[i].dim % 2 == 0 && alpha[i] != 0) s.is_odd = false;
            s.parity = d % 2;
            out.push_back(std::move(s));
            return;
        }
        const auto& f = spec.factors[p];
        for (int a = 0; a <= f.count && a * f.dim <= remaining; ++a) {
            alpha.push_back(a);
            self(self, p + 1, remaining - a * f.dim);
            alpha.pop_back();
        }
    };
    recurse(recurse, 0, d);
    return out;
}

void GeneratorBlocks::validate(const SphereProductSpec& spec) const {
    for (const auto& f : spec.factors) {
        if (f.dim % 2 == 0) continue;
        auto it = by_dim.find(f.dim);
        if (it == by_dim.end())
            throw std::domain_error("missing generator block for odd dimension " +
                                    std::to_string(f.dim));
        const IntMatrix& a = it->second;
        if (a.rows() != static_cast<std::size_t>(f.count) || a.cols() != a.rows())
            throw std::domain_error("generator block for dimension " + std::to_string(f.dim) +
                                    " must be " + std::to_string(f.count) + "x" +
                                    std::to_string(f.count));
        if (!a.is_unimodular())
            throw std::domain_error("generator block for dimension " + std::to_string(f.dim) +
                                    " is not unimodular");
    }
}

IntMatrix block(const SphereProductSpec& spec, const GeneratorBlocks& blocks,
                const Splitting& splitting) {
    blocks.validate(spec);
    IntMatrix b = IntMatrix::identity(1);
    for (std::size_t p = 0; p < spec.factors.size(); ++p) {
        const auto& f = spec.factors[p];
        if (f.dim % 2 == 0) continue;
        b = kronecker(b, exterior_power(blocks.by_dim.at(f.dim), splitting.alpha[p]));
    }
    return b;
}

std::string block_label(const SphereProductSpec& spec, const Splitting& splitting) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t p = 0; p < spec.factors.size(); ++p) {
        const auto& f = spec.factors[p];
        if (f.dim % 2 == 0 || splitting.alpha[p] == 0) continue;
        if (!first) os << "(x)";
        os << "A" << f.dim;
        if (splitting.alpha[p] > 1) os << "^" << splitting.alpha[p];
        first = false;
    }
    return first ? "Id" : os.str();
}

Int BlockDecomposition::dimension_at(int d) const {
    Int total = 0;
    for (const auto& entry : per_degree[static_cast<std::size_t>(d)])
        total += entry.multiplicity * Int(entry.matrix.rows());
    return total;
}

BlockDecomposition block_table(const SphereProductSpec& spec, const GeneratorBlocks& blocks) {
    spec.validate();
    blocks.validate(spec);
    BlockDecomposition table;
    table.even_generator_total = spec.even_generator_total();
    const int dim = spec.dimension();
    table.per_degree.resize(static_cast<std::size_t>(dim) + 1);

    // Appearances keyed by the odd part of the splitting.
    std::map<std::vector<int>, Int> appearances;
    std::map<std::vector<int>, int> parity_of;

    for (int d = 0; d <= dim; ++d) {
        for (const auto& s : enumerate_splittings(spec, d)) {
            BlockEntry entry;
            entry.splitting = s;
            // The block depends only on the odd part; even components carry
            // the multiplicity.
            Splitting odd_part = s;
            Int mult = 1;
            for (std::size_t p = 0; p < spec.factors.size(); ++p)
                if (spec.factors[p].dim % 2 == 0) {
                    mult *= binomial(spec.factors[p].count, s.alpha[p]);
                    odd_part.alpha[p] = 0;
                }
            entry.matrix = block(spec, blocks, odd_part);
            entry.multiplicity = mult;
            entry.label = block_label(spec, odd_part);
            auto key = odd_part.alpha;
            appearances[key] += mult;
            auto [it, inserted] = parity_of.emplace(key, d % 2);
            if (!inserted && it->second != d % 2)
                throw std::logic_error("odd-splitting block appears in degrees of mixed parity");
            table.per_degree[static_cast<std::size_t>(d)].push_back(std::move(entry));
        }
        // Block dimensions must add up to the Betti number.
        Int expected = 0;
        for (const auto& s : enumerate_splittings(spec, d)) {
            Int size = 1;
            for (std::size_t p = 0; p < spec.factors.size(); ++p)
                size *= binomial(spec.factors[p].count, s.alpha[p]);
            expected += size;
        }
        if (table.dimension_at(d) != expected)
            throw std::logic_error("block table dimension mismatch at degree " + std::to_string(d));
    }

    const Int two_e = Int(1) << spec.even_generator_total();
    for (const auto& [key, count] : appearances)
        if (count != two_e)
            throw std::logic_error("odd-splitting block appears " + count.str() +
                                   " times, expected 2^e = " + two_e.str());
    return table;
}

long even_generator_order(const SphereProductSpec& spec, const GradedAutomorphism& aut) {
    spec.validate();
    const GradedRingDescription ring = spec.to_ring();
    validate_automorphism(ring, aut);

    std::vector<std::pair<int, int>> even_groups;  // (degree, count)
    int max_count = 0, total = 0;
    for (const auto& f : spec.factors) {
        max_count = std::max(max_count, f.count);
        total += f.count;
        if (f.dim % 2 == 0) even_groups.emplace_back(f.dim, f.count);
    }
    if (even_groups.empty()) return 1;

    Int cap = 2 * factorial(max_count) * (Int(1) << total);
    // The generator splitting is the least splitting of its degree, so the
    // generator sub-block sits in the upper-left corner.
    std::vector<IntMatrix> powers;
    for (const auto& [deg, count] : even_groups) powers.push_back(aut.matrix(deg));
    for (Int l = 1; l <= cap; ++l) {
        bool all_fixed = true;
        for (std::size_t g = 0; g < even_groups.size(); ++g) {
            int count = even_groups[g].second;
            for (int i = 0; i < count && all_fixed; ++i)
                for (int j = 0; j < count; ++j)
                    if (powers[g].at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) !=
                        (i == j ? 1 : 0)) {
                        all_fixed = false;
                        break;
                    }
            if (!all_fixed) break;
        }
        if (all_fixed) return l.convert_to<long>();
        for (std::size_t g = 0; g < even_groups.size(); ++g)
            powers[g] = powers[g] * aut.matrix(even_groups[g].first);
    }
    throw std::runtime_error("even generator order exceeds the search cap " + cap.str() +
                             "; this contradicts the finite-order property of even blocks");
}

bool filtration_invariance_test(const SphereProductSpec& spec, const GradedAutomorphism& aut) {
    const GradedRingDescription ring = spec.to_ring();
    validate_automorphism(ring, aut);
    for (int d = 0; d <= ring.top_degree(); ++d) {
        auto basis = build_basis(ring, d);
        std::vector<std::vector<int>> splits;
        splits.reserve(basis.size());
        for (const auto& m : basis) splits.push_back(monomial_splitting(ring, m));
        const IntMatrix& mat = aut.matrix(d);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (mat.at(i, j) != 0 && splitting_less(splits[j], splits[i])) return false;
    }
    return true;
}

GradedAutomorphism assemble_block_diagonal(const SphereProductSpec& spec,
                                           const GeneratorBlocks& blocks) {
    auto table = block_table(spec, blocks);
    GradedAutomorphism aut;
    for (std::size_t d = 0; d < table.per_degree.size(); ++d) {
        Int n = table.dimension_at(static_cast<int>(d));
        auto size = n.convert_to<std::size_t>();
        IntMatrix m(size, size);
        std::size_t offset = 0;
        for (const auto& entry : table.per_degree[d]) {
            long copies = entry.multiplicity.convert_to<long>();
            for (long c = 0; c < copies; ++c) {
                for (std::size_t i = 0; i < entry.matrix.rows(); ++i)
                    for (std::size_t j = 0; j < entry.matrix.cols(); ++j)
                        m.at(offset + i, offset + j) = entry.matrix.at(i, j);
                offset += entry.matrix.rows();
            }
        }
        aut.degree_matrices.push_back(std::move(m));
    }
    return aut;
}

Theorem16Result theorem16_check(const SphereProductSpec& spec, const GeneratorBlocks& blocks) {
    spec.validate();
    Theorem16Result result;
    const int e = spec.even_generator_total();
    if (e < 1)
        throw std::domain_error("theorem16_check needs at least one even-dimensional sphere");
    result.applicable = true;
    result.even_power = Int(1) << e;

    GradedAutomorphism family = assemble_block_diagonal(spec, blocks);
    result.growth = anosov_compatibility(family, TraceConvention::InverseTraces);
    result.growth.notes.push_back("even-degree generator blocks reduced to identity "
                                  "(finite-power reduction)");

    switch (result.growth.kind) {
        case GrowthVerdict::Kind::Coefficient: {
            result.leading_coefficient = Int(result.growth.coefficient);
            if (result.leading_coefficient % result.even_power != 0)
                throw std::logic_error("leading coefficient is not divisible by 2^e");
            result.excludes_transitive = true;
            result.verdict = "transitive Anosov excluded: |Fix(f^l)| has leading coefficient " +
                             result.leading_coefficient.str() + " = 2^" + std::to_string(e) + " * " +
                             Int(result.leading_coefficient / result.even_power).str() +
                             " >= 2, which contradicts the coefficient-1 growth of a transitive "
                             "Anosov diffeomorphism";
            break;
        }
        case GrowthVerdict::Kind::Bounded:
        case GrowthVerdict::Kind::IdenticallyZero:
            result.excludes_transitive = true;
            result.excludes_all = true;
            result.verdict = "no Anosov-compatible growth: the Lefschetz sequence is bounded, so "
                             "no power of f has exponentially many fixed points";
            break;
        case GrowthVerdict::Kind::Inconsistent:
            result.excludes_transitive = true;
            result.excludes_all = true;
            result.verdict = "no Anosov-compatible growth: the dominant coefficient cannot be a "
                             "constant positive integer";
            break;
    }
    return result;
}

Theorem17Result theorem17_check(const SphereProductSpec& spec, const GeneratorBlocks& blocks,
                                int k, unsigned long max_l) {
    spec.validate();
    if (k % 2 == 0) throw std::domain_error("theorem17_check needs an odd sphere dimension");
    int k_index = -1;
    for (std::size_t p = 0; p < spec.factors.size(); ++p)
        if (spec.factors[p].dim == k) k_index = static_cast<int>(p);
    if (k_index < 0 || spec.factors[static_cast<std::size_t>(k_index)].count != 1)
        throw std::domain_error("theorem17_check needs S^k to appear in the product exactly once");

    Theorem17Result result;
    result.odd_dim_once = k;

    GeneratorBlocks effective = blocks;
    // The k-block is forced to the 1x1 identity after the finite-power
    // reduction; fill it in when absent, square a [-1] away, reject the rest.
    auto it = effective.by_dim.find(k);
    if (it == effective.by_dim.end()) {
        effective.by_dim[k] = IntMatrix::identity(1);
    } else if (it->second == -IntMatrix::identity(1)) {
        it->second = IntMatrix::identity(1);
        result.verdict = "power reduction applied: squared the S^" + std::to_string(k) +
                         " block [-1] to [1]; ";
    } else if (!(it->second == IntMatrix::identity(1))) {
        throw std::domain_error("the block for dimension " + std::to_string(k) +
                                " is forced to [+-1]");
    }

    const int dim = spec.dimension();
    // Structural pairing: every splitting without the k-factor matches the
    // splitting with it, k degrees up, with the same block and multiplicity.
    struct Paired {
        Splitting without, with;
        IntMatrix matrix;
        Int multiplicity;
        int degree;  // degree of `without`
    };
    std::vector<Paired> pairs;
    for (int d = 0; d <= dim; ++d)
        for (const auto& s : enumerate_splittings(spec, d)) {
            if (s.alpha[static_cast<std::size_t>(k_index)] != 0) continue;
            Splitting partner = s;
            partner.alpha[static_cast<std::size_t>(k_index)] = 1;
            partner.degree = d + k;
            IntMatrix b1 = block(spec, effective, s);
            IntMatrix b2 = block(spec, effective, partner);
            if (!(b1 == b2))
                throw std::logic_error("paired splittings have different blocks");
            Int mult = 1;
            for (std::size_t p = 0; p < spec.factors.size(); ++p)
                if (spec.factors[p].dim % 2 == 0)
                    mult *= binomial(spec.factors[p].count, s.alpha[p]);
            pairs.push_back(Paired{s, partner, b1, mult, d});
        }
    result.pairing_verified = true;

    // Pairing path: opposite parities cancel pair by pair.
    for (unsigned long l = 1; l <= max_l; ++l) {
        Int total = 0;
        for (const auto& p : pairs) {
            Int t = p.matrix.inverse_unimodular().pow(l).trace() * p.multiplicity;
            total += (p.degree % 2 == 0) ? t : Int(-t);
            int d2 = p.degree + k;
            total += (d2 % 2 == 0) ? t : Int(-t);
        }
        result.sequence_pairing.push_back(total);
    }

    // Generic exact path through the assembled diagonal family.
    auto seq = lefschetz_sequence(assemble_block_diagonal(spec, effective), max_l,
                                  TraceConvention::InverseTraces);
    result.sequence_generic = seq.values;

    if (result.sequence_generic != result.sequence_pairing)
        throw std::logic_error("pairing path disagrees with the generic trace path");
    bool all_zero = std::all_of(result.sequence_generic.begin(), result.sequence_generic.end(),
                                [](const Int& v) { return v == 0; });
    if (!all_zero) throw std::logic_error("theorem17 cancellation failed");
    result.verdict += "no Anosov diffeomorphism: Lambda(f^l) = 0 exactly for all l, so every "
                      "power of f would be fixed-point free";
    return result;
}

} // namespace anosov
