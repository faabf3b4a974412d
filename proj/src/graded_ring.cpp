#include "anosov/graded_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace anosov {

GradedRingDescription::GradedRingDescription(std::vector<Generator> generators)
    : generators_(std::move(generators)) {
    std::set<std::string> labels;
    int prev_degree = 0;
    for (const auto& g : generators_) {
        if (g.degree < 1) throw std::domain_error("generator degree must be >= 1");
        if (g.nilpotency < 2) throw std::domain_error("generator nilpotency must be >= 2");
        if (g.nilpotency > 2 && g.degree % 2 != 0)
            throw std::domain_error("odd-degree generator '" + g.label +
                                    "' squares to zero; nilpotency > 2 is inconsistent");
        if (g.degree < prev_degree)
            throw std::domain_error("generators must be listed with non-decreasing degrees");
        prev_degree = g.degree;
        if (!labels.insert(g.label).second)
            throw std::domain_error("duplicate generator label '" + g.label + "'");
        top_degree_ += g.degree * (g.nilpotency - 1);
    }
    for (int i = 0; i < static_cast<int>(generators_.size());) {
        DegreeGroup grp{generators_[static_cast<std::size_t>(i)].degree, i, 0, 0};
        int j = i;
        while (j < static_cast<int>(generators_.size()) &&
               generators_[static_cast<std::size_t>(j)].degree == grp.degree) {
            grp.count += 1;
            grp.weight_cap += generators_[static_cast<std::size_t>(j)].nilpotency - 1;
            ++j;
        }
        groups_.push_back(grp);
        i = j;
    }
}

int GradedRingDescription::generator_index(const std::string& label) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].label == label) return static_cast<int>(i);
    return -1;
}

bool Monomial::is_unit() const {
    for (int e : exponents)
        if (e != 0) return false;
    return true;
}

int Monomial::degree(const GradedRingDescription& ring) const {
    int d = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        d += exponents[i] * ring.generators()[i].degree;
    return d;
}

std::string Monomial::to_string(const GradedRingDescription& ring) const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!first) os << "*";
        if (exponents[i] == 1) os << ring.generators()[i].label;
        else os << "(" << ring.generators()[i].label << ")^" << exponents[i];
        first = false;
    }
    return os.str();
}

namespace {

// Splittings of d over the degree groups, ascending lexicographic order
// (first differing weight decides, smaller first).
void enumerate_group_weights(const std::vector<GradedRingDescription::DegreeGroup>& groups,
                             std::size_t p, int remaining, std::vector<int>& current,
                             std::vector<std::vector<int>>& out) {
    if (p == groups.size()) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    const auto& g = groups[p];
    for (int w = 0; w <= g.weight_cap && w * g.degree <= remaining; ++w) {
        current.push_back(w);
        enumerate_group_weights(groups, p + 1, remaining - w * g.degree, current, out);
        current.pop_back();
    }
}

// Exponent assignments within one degree group summing to `weight`,
// ordered so that the induced index-with-multiplicity tuples are
// lexicographically increasing: descending lexicographic on exponent
// vectors (heavier early generators first).
void enumerate_group_exponents(const GradedRingDescription& ring,
                               const GradedRingDescription::DegreeGroup& grp, int gen_offset,
                               int weight, std::vector<int>& current,
                               std::vector<std::vector<int>>& out) {
    if (gen_offset == grp.count) {
        if (weight == 0) out.push_back(current);
        return;
    }
    const auto& g = ring.generators()[static_cast<std::size_t>(grp.first + gen_offset)];
    int cap = std::min(g.nilpotency - 1, weight);
    for (int e = cap; e >= 0; --e) {
        current.push_back(e);
        enumerate_group_exponents(ring, grp, gen_offset + 1, weight - e, current, out);
        current.pop_back();
    }
}

void product_of_blocks(const std::vector<std::vector<std::vector<int>>>& per_group,
                       std::size_t p, std::vector<int>& acc, std::vector<Monomial>& out) {
    if (p == per_group.size()) {
        out.push_back(Monomial{acc});
        return;
    }
    for (const auto& choice : per_group[p]) {
        std::size_t before = acc.size();
        acc.insert(acc.end(), choice.begin(), choice.end());
        product_of_blocks(per_group, p + 1, acc, out);
        acc.resize(before);
    }
}

} // namespace

std::vector<Monomial> build_basis(const GradedRingDescription& ring, int d) {
    if (d < 0 || d > ring.top_degree())
        throw std::domain_error("degree out of range [0, top_degree]");
    std::vector<std::vector<int>> splittings;
    std::vector<int> current;
    enumerate_group_weights(ring.groups(), 0, d, current, splittings);

    std::vector<Monomial> basis;
    for (const auto& split : splittings) {
        std::vector<std::vector<std::vector<int>>> per_group(ring.groups().size());
        for (std::size_t p = 0; p < ring.groups().size(); ++p) {
            std::vector<int> cur;
            enumerate_group_exponents(ring, ring.groups()[p], 0, split[p], cur, per_group[p]);
        }
        std::vector<int> acc;
        product_of_blocks(per_group, 0, acc, basis);
    }
    return basis;
}

SignedMonomial cup(const GradedRingDescription& ring, const Monomial& a, const Monomial& b) {
    const auto& gens = ring.generators();
    if (a.exponents.size() != gens.size() || b.exponents.size() != gens.size())
        throw std::invalid_argument("monomial does not match ring");
    Monomial merged;
    merged.exponents.resize(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int e = a.exponents[i] + b.exponents[i];
        if (e >= gens[i].nilpotency) return SignedMonomial::make_zero();
        merged.exponents[i] = e;
    }
    // Koszul sign: each odd factor of b moved left past each later-indexed
    // odd factor of a contributes one transposition. Odd generators have
    // exponent <= 1, so this is a plain inversion count.
    long inversions = 0;
    long odd_in_a_after = 0;  // odd-degree factors of a with index > current b index
    // Count pairs (i in a, j in b) with i > j, both odd degree.
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (b.exponents[j] == 0 || gens[j].degree % 2 == 0) continue;
        odd_in_a_after = 0;
        for (std::size_t i = j + 1; i < gens.size(); ++i)
            if (a.exponents[i] != 0 && gens[i].degree % 2 != 0) odd_in_a_after += a.exponents[i];
        inversions += odd_in_a_after;
    }
    SignedMonomial out;
    out.zero = false;
    out.sign = (inversions % 2 == 0) ? 1 : -1;
    out.monomial = std::move(merged);
    return out;
}

int betti(const GradedRingDescription& ring, int d) {
    return static_cast<int>(build_basis(ring, d).size());
}

Int euler_characteristic(const GradedRingDescription& ring) {
    Int chi = 0;
    for (int d = 0; d <= ring.top_degree(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * Int(betti(ring, d));
    return chi;
}

std::vector<int> monomial_splitting(const GradedRingDescription& ring, const Monomial& m) {
    std::vector<int> split(ring.groups().size(), 0);
    for (std::size_t p = 0; p < ring.groups().size(); ++p) {
        const auto& grp = ring.groups()[p];
        for (int i = 0; i < grp.count; ++i)
            split[p] += m.exponents[static_cast<std::size_t>(grp.first + i)];
    }
    return split;
}

Monomial top_monomial(const GradedRingDescription& ring) {
    Monomial m;
    for (const auto& g : ring.generators()) m.exponents.push_back(g.nilpotency - 1);
    return m;
}

IntMatrix intersection_pairing(const GradedRingDescription& ring, int d) {
    if (d < 0 || d > ring.top_degree())
        throw std::domain_error("degree out of range [0, top_degree]");
    auto basis_d = build_basis(ring, d);
    auto basis_c = build_basis(ring, ring.top_degree() - d);
    const Monomial top = top_monomial(ring);
    IntMatrix p(basis_d.size(), basis_c.size());
    for (std::size_t i = 0; i < basis_d.size(); ++i)
        for (std::size_t j = 0; j < basis_c.size(); ++j) {
            SignedMonomial prod = cup(ring, basis_d[i], basis_c[j]);
            if (!prod.zero && prod.monomial == top) p.at(i, j) = prod.sign;
        }
    return p;
}

BasisTable::BasisTable(const GradedRingDescription& ring) : ring_(&ring) {
    bases_.resize(static_cast<std::size_t>(ring.top_degree()) + 1);
    index_.resize(bases_.size());
    for (int d = 0; d <= ring.top_degree(); ++d) {
        bases_[static_cast<std::size_t>(d)] = build_basis(ring, d);
        auto& idx = index_[static_cast<std::size_t>(d)];
        const auto& b = bases_[static_cast<std::size_t>(d)];
        for (std::size_t i = 0; i < b.size(); ++i) idx[b[i].exponents] = static_cast<int>(i);
    }
}

const std::vector<Monomial>& BasisTable::basis(int d) const {
    if (d < 0 || d > ring_->top_degree())
        throw std::domain_error("degree out of range [0, top_degree]");
    return bases_[static_cast<std::size_t>(d)];
}

int BasisTable::index_of(int d, const Monomial& m) const {
    const auto& idx = index_[static_cast<std::size_t>(d)];
    auto it = idx.find(m.exponents);
    return it == idx.end() ? -1 : it->second;
}

GradedRingDescription torus_ring(int n) {
    return sphere_product_ring({{1, n}});
}

GradedRingDescription sphere_product_ring(const std::vector<std::pair<int, int>>& factors) {
    std::vector<Generator> gens;
    int p = 0;
    int prev = 0;
    for (const auto& [dim, count] : factors) {
        if (dim <= prev) throw std::domain_error("sphere dimensions must be strictly increasing");
        if (count < 1) throw std::domain_error("sphere multiplicity must be >= 1");
        prev = dim;
        ++p;
        for (int q = 1; q <= count; ++q)
            gens.push_back(Generator{"x" + std::to_string(q) + "^" + std::to_string(p), dim, 2});
    }
    return GradedRingDescription(std::move(gens));
}

GradedRingDescription projective_space_ring(int n) {
    if (n < 1) throw std::domain_error("projective space index must be >= 1");
    return GradedRingDescription({Generator{"x1^1", 2, n + 1}});
}

GradedRingDescription ring_product(const GradedRingDescription& a, const GradedRingDescription& b) {
    std::vector<Generator> merged;
    for (const auto& g : a.generators()) merged.push_back(g);
    for (const auto& g : b.generators()) merged.push_back(g);
    std::stable_sort(merged.begin(), merged.end(),
                     [](const Generator& x, const Generator& y) { return x.degree < y.degree; });
    // Regenerate canonical labels x{q}^{p} per degree group.
    std::vector<Generator> relabeled;
    int p = 0, q = 0, prev_degree = -1;
    for (auto& g : merged) {
        if (g.degree != prev_degree) {
            ++p;
            q = 0;
            prev_degree = g.degree;
        }
        ++q;
        relabeled.push_back(
            Generator{"x" + std::to_string(q) + "^" + std::to_string(p), g.degree, g.nilpotency});
    }
    return GradedRingDescription(std::move(relabeled));
}

} // namespace anosov
