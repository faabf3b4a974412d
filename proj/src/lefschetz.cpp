#include "anosov/lefschetz.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "anosov/polynomial.hpp"
#include "anosov/roots.hpp"

namespace anosov {

namespace {

std::vector<IntMatrix> trace_matrices(const GradedAutomorphism& aut, TraceConvention conv) {
    std::vector<IntMatrix> out;
    for (const auto& m : aut.degree_matrices) {
        if (!m.is_unimodular())
            throw std::domain_error("Lefschetz traces need unimodular matrices (inverse not integral)");
        out.push_back(conv == TraceConvention::InverseTraces ? m.inverse_unimodular() : m);
    }
    return out;
}

struct SignedEigenvalue {
    std::complex<double> value;
    int weight;  // (-1)^degree times multiplicity
    double error;
};

std::vector<SignedEigenvalue> signed_spectrum(const std::vector<IntMatrix>& mats) {
    std::vector<SignedEigenvalue> out;
    for (std::size_t d = 0; d < mats.size(); ++d) {
        int sign = (d % 2 == 0) ? 1 : -1;
        for (const auto& root : matrix_eigenvalues(mats[d]))
            out.push_back(SignedEigenvalue{root.value, sign * root.multiplicity, root.error});
    }
    return out;
}

long total_dimension(const GradedAutomorphism& aut) {
    long n = 0;
    for (const auto& m : aut.degree_matrices) n += static_cast<long>(m.rows());
    return n;
}

bool exactly_bounded(const GradedAutomorphism& aut) {
    for (const auto& m : aut.degree_matrices)
        if (!all_roots_of_unity(charpoly(m))) return false;
    return true;
}

struct Group {
    double modulus;
    std::vector<SignedEigenvalue> members;
    long long signed_count;
};

std::vector<Group> group_by_modulus(std::vector<SignedEigenvalue> eigs, double tolerance) {
    std::sort(eigs.begin(), eigs.end(), [](const SignedEigenvalue& a, const SignedEigenvalue& b) {
        return std::abs(a.value) > std::abs(b.value);
    });
    std::vector<Group> groups;
    for (const auto& e : eigs) {
        double m = std::abs(e.value);
        if (!groups.empty()) {
            double ref = groups.back().modulus;
            double gap = std::abs(ref - m);
            double err = 20.0 * (e.error + 1e-13 * std::max(1.0, ref));
            if (gap <= tolerance * std::max(1.0, ref)) {
                if (gap > err && gap > 1e-12)
                    throw std::runtime_error(
                        "unresolved grouping: moduli " + std::to_string(ref) + " and " +
                        std::to_string(m) +
                        " are distinct but within tolerance; lower the tolerance or extend the "
                        "exact sequence");
                groups.back().members.push_back(e);
                groups.back().signed_count += e.weight;
                continue;
            }
        }
        groups.push_back(Group{m, {e}, e.weight});
    }
    return groups;
}

// Net weights of the distinct eigenvalue values inside one modulus group.
struct RatioTerm {
    std::complex<double> ratio;  // value / modulus, on the unit circle
    long long weight;
};

std::vector<RatioTerm> net_ratio_terms(const Group& g) {
    std::vector<RatioTerm> terms;
    for (const auto& e : g.members) {
        std::complex<double> r = e.value / g.modulus;
        bool merged = false;
        for (auto& t : terms)
            if (std::abs(t.ratio - r) < 1e-7) {
                t.weight += e.weight;
                merged = true;
                break;
            }
        if (!merged) terms.push_back(RatioTerm{r, e.weight});
    }
    std::erase_if(terms, [](const RatioTerm& t) { return t.weight == 0; });
    return terms;
}

// Order of a unit-circle ratio as a root of unity, or 0 if none <= cap.
int root_of_unity_order(std::complex<double> z, int cap) {
    std::complex<double> p(1.0, 0.0);
    for (int k = 1; k <= cap; ++k) {
        p *= z;
        if (std::abs(p - std::complex<double>(1.0, 0.0)) < 1e-6) return k;
    }
    return 0;
}

std::complex<double> coefficient_at(const std::vector<RatioTerm>& terms, long l) {
    std::complex<double> c(0.0, 0.0);
    for (const auto& t : terms) c += static_cast<double>(t.weight) * std::pow(t.ratio, l);
    return c;
}

} // namespace

Int lefschetz_number(const GradedAutomorphism& aut, unsigned long l, TraceConvention conv) {
    auto mats = trace_matrices(aut, conv);
    Int total = 0;
    for (std::size_t d = 0; d < mats.size(); ++d) {
        Int t = mats[d].pow(l).trace();
        total += (d % 2 == 0) ? t : Int(-t);
    }
    return total;
}

LefschetzSequence lefschetz_sequence(const GradedAutomorphism& aut, unsigned long max_l,
                                     TraceConvention conv) {
    auto mats = trace_matrices(aut, conv);
    LefschetzSequence seq;
    seq.convention = conv;
    std::vector<IntMatrix> powers = mats;  // running l-th powers
    for (unsigned long l = 1; l <= max_l; ++l) {
        Int total = 0;
        for (std::size_t d = 0; d < mats.size(); ++d) {
            Int t = powers[d].trace();
            total += (d % 2 == 0) ? t : Int(-t);
        }
        seq.values.push_back(total);
        if (l < max_l)
            for (std::size_t d = 0; d < mats.size(); ++d) powers[d] = powers[d] * mats[d];
    }
    return seq;
}

SpectralSummary growth_analysis(const GradedAutomorphism& aut, TraceConvention conv,
                                double tolerance) {
    auto mats = trace_matrices(aut, conv);
    SpectralSummary summary;
    summary.bounded = exactly_bounded(aut);

    auto groups = group_by_modulus(signed_spectrum(mats), tolerance);
    for (const auto& g : groups)
        summary.groups.push_back(ModulusGroup{g.modulus, g.signed_count});
    summary.entropy = groups.empty() ? 0.0 : std::log(std::max(groups.front().modulus, 1.0));

    // Cross-validate the grouped spectrum against the exact sequence: the
    // full signed eigenvalue reconstruction must reproduce Lambda(l).
    const unsigned long check_l = 12;
    auto seq = lefschetz_sequence(aut, check_l, conv);
    double dominant = groups.empty() ? 1.0 : std::max(groups.front().modulus, 1.0);
    for (unsigned long l = 1; l <= check_l; ++l) {
        std::complex<double> rec(0.0, 0.0);
        for (const auto& g : groups)
            for (const auto& e : g.members)
                rec += static_cast<double>(e.weight) * std::pow(e.value, static_cast<double>(l));
        double exact = to_double(seq.values[l - 1]);
        double scale = std::max(1.0, std::pow(dominant, static_cast<double>(l)));
        if (std::abs(rec.real() - exact) > 1e-6 * scale)
            throw std::runtime_error("spectral reconstruction deviates from the exact sequence");
    }
    return summary;
}

std::string to_string(GrowthVerdict::Kind kind) {
    switch (kind) {
        case GrowthVerdict::Kind::Bounded: return "BOUNDED";
        case GrowthVerdict::Kind::IdenticallyZero: return "IDENTICALLY_ZERO";
        case GrowthVerdict::Kind::Coefficient: return "COEFFICIENT";
        case GrowthVerdict::Kind::Inconsistent: return "INCONSISTENT";
    }
    return "?";
}

GrowthVerdict anosov_compatibility(const GradedAutomorphism& aut, TraceConvention conv,
                                   double tolerance) {
    GrowthVerdict verdict;
    const long dim = total_dimension(aut);
    const unsigned long zero_cert = static_cast<unsigned long>(dim) + 2;
    auto seq = lefschetz_sequence(aut, std::max<unsigned long>(30, zero_cert), conv);

    // A power sum over at most `dim` eigenvalues vanishing for dim+ samples
    // vanishes identically (Vandermonde), so this zero test is a certificate.
    if (std::all_of(seq.values.begin(), seq.values.end(), [](const Int& v) { return v == 0; })) {
        verdict.kind = GrowthVerdict::Kind::IdenticallyZero;
        verdict.notes.push_back("Lambda(l) = 0 exactly for l = 1.." +
                                std::to_string(seq.values.size()) +
                                " (certified: more samples than eigenvalues)");
        return verdict;
    }

    if (exactly_bounded(aut)) {
        verdict.kind = GrowthVerdict::Kind::Bounded;
        verdict.notes.push_back(
            "every eigenvalue of every degree matrix is a root of unity (exact cyclotomic test)");
        return verdict;
    }

    auto mats = trace_matrices(aut, conv);
    auto groups = group_by_modulus(signed_spectrum(mats), tolerance);

    int cascade_step = 0;
    for (const auto& g : groups) {
        if (g.modulus <= 1.0 + 1e-9) break;  // only modulus-<=1 terms remain
        ++cascade_step;
        auto terms = net_ratio_terms(g);
        if (terms.empty()) {
            verdict.notes.push_back("cascade step " + std::to_string(cascade_step) + ": modulus " +
                                    std::to_string(g.modulus) + " cancels identically");
            continue;
        }

        int period = 1;
        bool rational = true;
        for (const auto& t : terms) {
            int order = root_of_unity_order(t.ratio, 360);
            if (order == 0) {
                rational = false;
                break;
            }
            period = static_cast<int>(std::lcm(period, order));
            if (period > 360 * 360) break;
        }

        verdict.lambda = g.modulus;
        if (!rational || period > 360 * 360) {
            // The coefficient never settles on residue classes; incompatible
            // with a constant integer coefficient in the growth law.
            double max_c = 0.0;
            for (long l = 1; l <= 720; ++l) max_c = std::max(max_c, std::abs(coefficient_at(terms, l)));
            verdict.kind = GrowthVerdict::Kind::Inconsistent;
            verdict.coefficient = static_cast<long long>(std::ceil(max_c));
            verdict.varies_with_residue = true;
            verdict.notes.push_back("dominant eigenvalue ratios are not roots of unity of order <= 360;"
                                    " no constant leading coefficient exists");
            return verdict;
        }

        double max_c = 0.0, min_c = 1e300;
        bool integral = true;
        for (int r = 0; r < period; ++r) {
            double c = std::abs(coefficient_at(terms, r));
            max_c = std::max(max_c, c);
            min_c = std::min(min_c, c);
            if (std::abs(c - std::round(c)) > 1e-6) integral = false;
        }
        verdict.residue_period = period;
        if (!integral) {
            verdict.kind = GrowthVerdict::Kind::Inconsistent;
            verdict.coefficient = static_cast<long long>(std::ceil(max_c));
            verdict.notes.push_back("leading coefficient is not an integer on residue classes");
            return verdict;
        }
        long long w = static_cast<long long>(std::llround(max_c));
        if (w == 0) {
            verdict.notes.push_back("cascade step " + std::to_string(cascade_step) +
                                    ": all residue coefficients vanish at modulus " +
                                    std::to_string(g.modulus));
            continue;
        }
        verdict.kind = GrowthVerdict::Kind::Coefficient;
        verdict.coefficient = w;
        verdict.varies_with_residue = std::llround(min_c) != w;
        if (cascade_step > 1)
            verdict.notes.push_back("leading coefficient found at cascade step " +
                                    std::to_string(cascade_step));
        if (verdict.varies_with_residue)
            verdict.notes.push_back(
                "coefficient varies with the residue class (period " + std::to_string(period) +
                "); incompatible with a constant-coefficient growth law");
        return verdict;
    }

    verdict.kind = GrowthVerdict::Kind::Bounded;
    verdict.notes.push_back("all moduli above 1 cancel identically; the sequence stays bounded");
    return verdict;
}

} // namespace anosov
