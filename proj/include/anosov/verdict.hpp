#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "anosov/graded_ring.hpp"
#include "anosov/intersection_form.hpp"
#include "anosov/sphere_products.hpp"

namespace anosov {

/// Input to the rule engine: a closed manifold described through its
/// cohomological data, plus optional hypothesis flags the topological rules
/// consume (characteristic classes are user-supplied facts, not computed).
struct ManifoldSpec {
    enum class Kind { SphereProduct, Ring, SphereBundle, FiberOverSphere, FormManifold };
    Kind kind = Kind::Ring;

    SphereProductSpec sphere_product;                 // Kind::SphereProduct
    GradedRingDescription ring;                       // Kind::Ring
    int fiber_dim = 0;                                // Kind::SphereBundle: fiber sphere dim
    std::shared_ptr<const ManifoldSpec> base;         // Kind::SphereBundle: base manifold
    std::shared_ptr<const ManifoldSpec> fiber;        // Kind::FiberOverSphere: fiber manifold
    int base_sphere_dim = 0;                          // Kind::FiberOverSphere

    int form_dim = 4;                                 // Kind::FormManifold: ambient 4n
    std::optional<UnimodularForm> form;               // Kind::FormManifold
    bool highly_connected = true;                     // (2n-1)-connected flag
    bool chi_nonzero = false;                         // Kind::FormManifold

    // Hypothesis flags (meaningful for any kind).
    bool has_nonzero_exponential_char_class = false;
    std::optional<int> codimension_hint;

    int dimension() const;
};

enum class Conclusion { NoAnosov, NoTransitiveAnosov, ParityConstraint, Inconclusive };

std::string to_string(Conclusion c);

struct VerdictEntry {
    Conclusion conclusion;
    std::string rule;        // rule identifier, e.g. "Thm 1.6"
    nlohmann::json evidence;
};

struct ObstructionReport {
    std::vector<VerdictEntry> verdicts;  // at least one entry
    std::vector<Int> betti;
    Int chi = 0;
    int dimension = 0;
    std::vector<std::string> assumptions;  // standing reductions
    bool bounded_only = false;             // some verdict rests on a bounded sweep
};

/// Betti numbers b_0..b_dim of the manifold the description encodes. Bundle
/// profiles follow the long-exact-sequence regimes; unsupported dimension
/// combinations raise std::domain_error("outside theorem hypotheses...").
std::vector<Int> betti_profile(const ManifoldSpec& spec);

/// Fires the obstruction rules in order (Betti rank rules, characteristic
/// class rules, bundle rules, sphere-product growth rules, intersection form
/// rules) and assembles the report. Rules that do not apply are omitted;
/// NO_ANOSOV suppresses weaker conclusions for the same manifold.
ObstructionReport apply_rules(const ManifoldSpec& spec);

} // namespace anosov
