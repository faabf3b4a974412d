#pragma once

#include <string>
#include <vector>

#include "anosov/automorphism.hpp"
#include "anosov/exact.hpp"

namespace anosov {

/// Which power of the induced maps enters the traces. The fixed-point count
/// formula uses inverse powers; for unimodular duality-respecting families
/// the two conventions agree up to a global sign depending on the parity of
/// the top degree.
enum class TraceConvention { InverseTraces, ForwardTraces };

struct LefschetzSequence {
    std::vector<Int> values;  // values[l-1] = Lambda(l), l = 1..L
    TraceConvention convention = TraceConvention::InverseTraces;
};

/// Lambda(l) = sum_d (-1)^d Tr(M_d^{-l or +l}), exact.
/// Throws std::domain_error if a matrix fails unimodularity.
Int lefschetz_number(const GradedAutomorphism& aut, unsigned long l, TraceConvention conv);

LefschetzSequence lefschetz_sequence(const GradedAutomorphism& aut, unsigned long max_l,
                                     TraceConvention conv);

struct ModulusGroup {
    double modulus = 0.0;
    long long signed_multiplicity = 0;  // sum over degrees of (-1)^d (eigenvalue count)
};

struct SpectralSummary {
    std::vector<ModulusGroup> groups;  // strictly decreasing modulus
    double entropy = 0.0;              // log of the dominant modulus
    bool bounded = false;              // exact: every eigenvalue is a root of unity
};

/// Groups eigenvalue moduli of the per-degree trace matrices and
/// cross-validates the grouped data against the exact sequence.
/// Throws std::runtime_error("unresolved grouping: ...") when two certifiably
/// distinct moduli fall within the grouping tolerance.
SpectralSummary growth_analysis(const GradedAutomorphism& aut, TraceConvention conv,
                                double tolerance = 1e-9);

/// Compatibility of the trace growth with the periodic-orbit growth laws of
/// (transitive) Anosov diffeomorphisms.
struct GrowthVerdict {
    enum class Kind {
        Bounded,           // no exponential growth: cannot be Anosov
        IdenticallyZero,   // Lambda == 0: fixed-point-free powers, cannot be Anosov
        Coefficient,       // |Lambda(l)| ~ coefficient * lambda^l along residues
        Inconsistent,      // dominant coefficient is not a constant positive integer
    };
    Kind kind = Kind::Bounded;
    double lambda = 0.0;          // dominant growth rate (> 1 for Coefficient)
    long long coefficient = 0;    // |w|; 1 is the transitive signature
    bool varies_with_residue = false;
    int residue_period = 1;
    std::vector<std::string> notes;  // reductions applied, cascade steps, caveats

    bool excludes_all_anosov() const {
        return kind == Kind::Bounded || kind == Kind::IdenticallyZero ||
               kind == Kind::Inconsistent || (kind == Kind::Coefficient && varies_with_residue);
    }
    bool excludes_transitive() const {
        return excludes_all_anosov() || (kind == Kind::Coefficient && coefficient != 1);
    }
};

GrowthVerdict anosov_compatibility(const GradedAutomorphism& aut,
                                   TraceConvention conv = TraceConvention::InverseTraces,
                                   double tolerance = 1e-9);

std::string to_string(GrowthVerdict::Kind kind);

} // namespace anosov
