#include "anosov/automorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace anosov {

namespace {

// Sparse linear combination of basis monomials, keyed by exponent vector.
using LinComb = std::map<std::vector<int>, Int>;

LinComb linc_cup(const GradedRingDescription& ring, const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            SignedMonomial prod = cup(ring, Monomial{ea}, Monomial{eb});
            if (prod.zero) continue;
            Int coeff = ca * cb * prod.sign;
            auto it = out.find(prod.monomial.exponents);
            if (it == out.end()) out.emplace(prod.monomial.exponents, std::move(coeff));
            else {
                it->second += coeff;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

LinComb linc_pow(const GradedRingDescription& ring, const LinComb& a, int k) {
    LinComb acc{{std::vector<int>(ring.generators().size(), 0), Int(1)}};
    for (int i = 0; i < k; ++i) acc = linc_cup(ring, acc, a);
    return acc;
}

} // namespace

GradedAutomorphism GradedAutomorphism::identity(const GradedRingDescription& ring) {
    GradedAutomorphism aut;
    for (int d = 0; d <= ring.top_degree(); ++d)
        aut.degree_matrices.push_back(IntMatrix::identity(static_cast<std::size_t>(betti(ring, d))));
    return aut;
}

void validate_automorphism(const GradedRingDescription& ring, const GradedAutomorphism& aut) {
    if (aut.top_degree() != ring.top_degree())
        throw std::domain_error("automorphism covers degrees 0.." +
                                std::to_string(aut.top_degree()) + " but ring has top degree " +
                                std::to_string(ring.top_degree()));
    for (int d = 0; d <= ring.top_degree(); ++d) {
        const IntMatrix& m = aut.matrix(d);
        auto expected = static_cast<std::size_t>(betti(ring, d));
        if (m.rows() != expected || m.cols() != expected)
            throw std::domain_error("degree " + std::to_string(d) + " matrix is " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                    ", expected " + std::to_string(expected));
        if (!m.is_unimodular())
            throw std::domain_error("not invertible over Z at degree " + std::to_string(d));
    }
    if (!aut.matrix(0).is_identity())
        throw std::domain_error("degree-0 matrix must be [1]");
}

GradedAutomorphism induce(const GradedRingDescription& ring, const GeneratorImages& images) {
    const auto& gens = ring.generators();
    BasisTable table(ring);

    // Generator images as sparse linear combinations; degree homogeneity is
    // implied by expressing each image over the basis of its own degree.
    std::vector<LinComb> gen_image(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        auto it = images.images.find(gens[g].label);
        if (it == images.images.end())
            throw std::domain_error("missing image for generator '" + gens[g].label + "'");
        const auto& basis = table.basis(gens[g].degree);
        if (it->second.size() != basis.size())
            throw std::domain_error("image of '" + gens[g].label + "' has " +
                                    std::to_string(it->second.size()) + " coordinates, basis has " +
                                    std::to_string(basis.size()));
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (it->second[i] != 0) gen_image[g][basis[i].exponents] = it->second[i];
    }

    // Relation check: (f* x)^nilpotency must vanish identically.
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].degree * gens[g].nilpotency > ring.top_degree()) continue;  // vanishes a priori
        LinComb p = linc_pow(ring, gen_image[g], gens[g].nilpotency);
        if (!p.empty())
            throw std::domain_error("not a ring map: relation violated for generator '" +
                                    gens[g].label + "'");
    }

    GradedAutomorphism aut;
    for (int d = 0; d <= ring.top_degree(); ++d) {
        const auto& basis = table.basis(d);
        IntMatrix m(basis.size(), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            LinComb image{{std::vector<int>(gens.size(), 0), Int(1)}};
            for (std::size_t g = 0; g < gens.size(); ++g) {
                int e = basis[i].exponents[g];
                if (e > 0) image = linc_cup(ring, image, linc_pow(ring, gen_image[g], e));
            }
            for (const auto& [expnts, coeff] : image) {
                int j = table.index_of(d, Monomial{expnts});
                if (j < 0) throw std::logic_error("image leaves the degree-" + std::to_string(d) +
                                                  " basis span");
                m.at(i, static_cast<std::size_t>(j)) = coeff;
            }
        }
        if (!m.is_unimodular())
            throw std::domain_error("not invertible over Z at degree " + std::to_string(d));
        aut.degree_matrices.push_back(std::move(m));
    }
    return aut;
}

std::vector<CupViolation> check_cup_preservation(const GradedRingDescription& ring,
                                                 const GradedAutomorphism& aut) {
    validate_automorphism(ring, aut);
    BasisTable table(ring);
    std::vector<CupViolation> violations;
    const int top = ring.top_degree();
    for (int d = 0; d <= top; ++d)
        for (int e = d; d + e <= top; ++e) {
            const auto& bd = table.basis(d);
            const auto& be = table.basis(e);
            const auto& bde = table.basis(d + e);
            const IntMatrix& md = aut.matrix(d);
            const IntMatrix& me = aut.matrix(e);
            const IntMatrix& mde = aut.matrix(d + e);
            for (std::size_t i = 0; i < bd.size(); ++i)
                for (std::size_t j = 0; j < be.size(); ++j) {
                    // lhs: f*(b_i cup b_j)
                    std::vector<Int> lhs(bde.size());
                    SignedMonomial prod = cup(ring, bd[i], be[j]);
                    if (!prod.zero) {
                        int k = table.index_of(d + e, prod.monomial);
                        for (std::size_t c = 0; c < bde.size(); ++c)
                            lhs[c] = Int(prod.sign) * mde.at(static_cast<std::size_t>(k), c);
                    }
                    // rhs: f*(b_i) cup f*(b_j)
                    std::vector<Int> rhs(bde.size());
                    for (std::size_t r = 0; r < bd.size(); ++r) {
                        if (md.at(i, r) == 0) continue;
                        for (std::size_t s = 0; s < be.size(); ++s) {
                            if (me.at(j, s) == 0) continue;
                            SignedMonomial q = cup(ring, bd[r], be[s]);
                            if (q.zero) continue;
                            int k = table.index_of(d + e, q.monomial);
                            rhs[static_cast<std::size_t>(k)] +=
                                md.at(i, r) * me.at(j, s) * q.sign;
                        }
                    }
                    if (lhs != rhs)
                        violations.push_back(CupViolation{d, e, static_cast<int>(i),
                                                          static_cast<int>(j), lhs, rhs});
                }
        }
    return violations;
}

GradedAutomorphism power(const GradedAutomorphism& aut, unsigned long m) {
    GradedAutomorphism out;
    for (const auto& mat : aut.degree_matrices) out.degree_matrices.push_back(mat.pow(m));
    return out;
}

bool duality_check(const GradedRingDescription& ring, const GradedAutomorphism& aut) {
    validate_automorphism(ring, aut);
    const int top = ring.top_degree();
    const IntMatrix& mt = aut.matrix(top);
    if (mt.rows() != 1) return false;  // not a Poincare-duality ring shape
    Int sigma = mt.at(0, 0);
    for (int d = 0; d <= top; ++d) {
        IntMatrix p = intersection_pairing(ring, d);
        IntMatrix lhs = aut.matrix(d) * p * aut.matrix(top - d).transpose();
        if (lhs != p.scaled(sigma)) return false;
    }
    return true;
}

namespace {

bool det_allowed(const Int& d, DetConstraint c) {
    switch (c) {
        case DetConstraint::PlusOne: return d == 1;
        case DetConstraint::MinusOne: return d == -1;
        case DetConstraint::Both: return d == 1 || d == -1;
    }
    return false;
}

bool satisfies_rank2_system(const Int& q, const Int& a, const Int& b, const Int& c, const Int& d,
                            const Int& w) {
    // (f*y)^2 = 0, f*x cup f*y = w*omega, (f*x)^2 = q*w*omega.
    return c * c * q + 2 * c * d == 0 && a * c * q + a * d + b * c == w &&
           a * a * q + 2 * a * b == q * w;
}

void push_unique(std::vector<IntMatrix>& v, IntMatrix m) {
    if (std::find(v.begin(), v.end(), m) == v.end()) v.push_back(std::move(m));
}

} // namespace

std::vector<IntMatrix> solve_rank2_middle(const Int& q, DetConstraint det_constraint,
                                          OmegaConstraint omega_constraint) {
    std::vector<IntMatrix> out;
    std::vector<Int> omega_signs{Int(1)};
    if (omega_constraint == OmegaConstraint::AnySign) omega_signs.push_back(Int(-1));

    for (const Int& w : omega_signs) {
        // Case w == delta: c = 0, a = +-1, d = delta/a, b determined by
        // q + 2ab = qw.
        for (Int delta : {Int(1), Int(-1)}) {
            if (delta != w || !det_allowed(delta, det_constraint)) continue;
            for (Int a : {Int(1), Int(-1)}) {
                Int d = delta * a;  // since a*d = delta and a^2 = 1
                // a^2 q + 2ab = q w  =>  2ab = q(w - 1), exact iff q(w-1) even.
                Int rhs = q * (w - 1);
                if (rhs % 2 != 0) continue;
                Int b = (rhs / 2) * a;  // b = rhs/(2a) and 1/a = a
                IntMatrix m{{a, b}, {Int(0), d}};
                if (satisfies_rank2_system(q, a, b, Int(0), d, w)) push_unique(out, std::move(m));
            }
        }
        // Case w == -delta: forces c | 2 with d = -cq/2, a = qc/2,
        // b = w/c - q^2 c / 4; integrality leaves |c| = 1 and q even.
        for (Int delta : {Int(1), Int(-1)}) {
            if (delta != -w || !det_allowed(delta, det_constraint)) continue;
            if (q % 2 != 0) continue;
            Int r = q / 2;
            for (Int sgn : {Int(1), Int(-1)}) {
                Int a = sgn * r;
                Int b = sgn * (w - r * r);
                Int c = sgn;
                Int d = -sgn * r;
                if (a * d - b * c != delta) continue;
                if (satisfies_rank2_system(q, a, b, c, d, w))
                    push_unique(out, IntMatrix{{a, b}, {c, d}});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const IntMatrix& x, const IntMatrix& y) {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                if (x.at(i, j) != y.at(i, j)) return x.at(i, j) > y.at(i, j);
        return false;
    });
    return out;
}

std::vector<IntMatrix> solve_rank2_middle_bruteforce(const Int& q, DetConstraint det_constraint,
                                                     OmegaConstraint omega_constraint, int bound) {
    std::vector<IntMatrix> out;
    std::vector<Int> omega_signs{Int(1)};
    if (omega_constraint == OmegaConstraint::AnySign) omega_signs.push_back(Int(-1));
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b)
            for (int c = -bound; c <= bound; ++c)
                for (int d = -bound; d <= bound; ++d) {
                    Int det = Int(a) * d - Int(b) * c;
                    if (!det_allowed(det, det_constraint)) continue;
                    for (const Int& w : omega_signs)
                        if (satisfies_rank2_system(q, a, b, c, d, w)) {
                            push_unique(out, IntMatrix{{Int(a), Int(b)}, {Int(c), Int(d)}});
                            break;
                        }
                }
    std::sort(out.begin(), out.end(), [](const IntMatrix& x, const IntMatrix& y) {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                if (x.at(i, j) != y.at(i, j)) return x.at(i, j) > y.at(i, j);
        return false;
    });
    return out;
}

} // namespace anosov
