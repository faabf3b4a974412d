#include "anosov/verdict.hpp"

#include <algorithm>
#include <stdexcept>

#include "anosov/automorphism.hpp"
#include "anosov/lefschetz.hpp"

namespace anosov {

using nlohmann::json;

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::NoAnosov: return "NO_ANOSOV";
        case Conclusion::NoTransitiveAnosov: return "NO_TRANSITIVE_ANOSOV";
        case Conclusion::ParityConstraint: return "PARITY_CONSTRAINT";
        case Conclusion::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

int ManifoldSpec::dimension() const {
    switch (kind) {
        case Kind::SphereProduct: return sphere_product.dimension();
        case Kind::Ring: return ring.top_degree();
        case Kind::SphereBundle: return fiber_dim + base->dimension();
        case Kind::FiberOverSphere: return fiber->dimension() + base_sphere_dim;
        case Kind::FormManifold: return form_dim;
    }
    return 0;
}

namespace {

std::vector<Int> profile_of_ring(const GradedRingDescription& ring) {
    std::vector<Int> out;
    for (int d = 0; d <= ring.top_degree(); ++d) out.push_back(Int(betti(ring, d)));
    return out;
}

Int profile_at(const std::vector<Int>& profile, int k) {
    if (k < 0 || k >= static_cast<int>(profile.size())) return 0;
    return profile[static_cast<std::size_t>(k)];
}

Int euler_from_profile(const std::vector<Int>& profile) {
    Int chi = 0;
    for (std::size_t d = 0; d < profile.size(); ++d)
        chi += (d % 2 == 0) ? profile[d] : Int(-profile[d]);
    return chi;
}

json profile_to_json(const std::vector<Int>& profile) {
    json out = json::array();
    for (const auto& b : profile) out.push_back(b.str());
    return out;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json sequence_to_json(const std::vector<Int>& seq) {
    json out = json::array();
    for (const auto& v : seq) out.push_back(v.str());
    return out;
}

// Deterministic sample generator blocks for a sphere product: the rules of
// the growth theorems hold for every automorphism, so any concrete family
// exhibits the coefficient structure. Odd dimensions of multiplicity >= 2
// get a hyperbolic block padded by the identity.
GeneratorBlocks sample_blocks(const SphereProductSpec& spec) {
    GeneratorBlocks blocks;
    for (const auto& f : spec.factors) {
        if (f.dim % 2 == 0) continue;
        IntMatrix a = IntMatrix::identity(static_cast<std::size_t>(f.count));
        if (f.count >= 2) {
            a.at(0, 0) = 2;
            a.at(0, 1) = 1;
            a.at(1, 0) = 1;
            a.at(1, 1) = 1;
        }
        blocks.by_dim[f.dim] = std::move(a);
    }
    return blocks;
}

json blocks_to_json(const GeneratorBlocks& blocks) {
    json out = json::object();
    for (const auto& [dim, m] : blocks.by_dim) out[std::to_string(dim)] = matrix_to_json(m);
    return out;
}

struct RuleContext {
    const ManifoldSpec& spec;
    std::vector<Int> profile;
    Int chi;
    std::vector<VerdictEntry> entries;
    bool bounded_only = false;

    void add(Conclusion c, std::string rule, json evidence) {
        entries.push_back(VerdictEntry{c, std::move(rule), std::move(evidence)});
    }
};

// Betti rank rules ------------------------------------------------------

void rule_all_betti_at_most_one(RuleContext& ctx) {
    bool all_small = std::all_of(ctx.profile.begin(), ctx.profile.end(),
                                 [](const Int& b) { return b <= 1; });
    if (!all_small) return;
    ctx.add(Conclusion::NoAnosov, "Prop 2.1",
            json{{"reason", "every Betti number is at most 1, so no induced map on cohomology "
                            "can have exponentially growing traces"},
                 {"betti", profile_to_json(ctx.profile)}});
}

void rule_codimension_hint(RuleContext& ctx) {
    if (!ctx.spec.codimension_hint) return;
    int k = *ctx.spec.codimension_hint;
    if (k < 1 || k >= static_cast<int>(ctx.profile.size())) return;
    if (profile_at(ctx.profile, k) > 1) return;
    ctx.add(Conclusion::NoTransitiveAnosov, "Prop 5.2",
            json{{"reason", "a codimension-" + std::to_string(k) +
                                " transitive map with orientable invariant distributions needs "
                                "b_k >= 2"},
                 {"codimension", k},
                 {"b_k", profile_at(ctx.profile, k).str()},
                 {"scope", "codimension-" + std::to_string(k) +
                               " maps with orientable invariant distributions"}});
}

void rule_characteristic_class(RuleContext& ctx) {
    Int max_middle = 0;
    for (std::size_t i = 1; i + 1 < ctx.profile.size(); ++i)
        max_middle = std::max(max_middle, ctx.profile[i]);
    if (max_middle > 2) return;

    bool chi_route = ctx.chi != 0;
    bool class_route = ctx.spec.has_nonzero_exponential_char_class;
    if (!chi_route && !class_route) return;

    json evidence{{"max_betti_above_degree_0", max_middle.str()},
                  {"betti", profile_to_json(ctx.profile)}};
    std::string rule;
    if (class_route) {
        rule = "Thm 6.1";
        evidence["reason"] =
            "a nonzero characteristic class with the exponential property forces b_k >= 3 in the "
            "codimension degree of any transitive map; all Betti numbers here are at most 2";
        evidence["hypothesis"] = "has_nonzero_exponential_char_class";
    } else {
        rule = "Cor 6.2 / Thm 1.9";
        evidence["reason"] =
            "nonzero Euler characteristic makes the Euler class available, forcing b_k >= 3 for "
            "transitive maps with orientable invariant distributions; all Betti numbers here are "
            "at most 2";
        evidence["chi"] = ctx.chi.str();
    }
    ctx.add(Conclusion::NoTransitiveAnosov, rule, std::move(evidence));
}

// Bundle rules ----------------------------------------------------------

bool profile_all_at_most_one(const std::vector<Int>& profile) {
    return std::all_of(profile.begin(), profile.end(), [](const Int& b) { return b <= 1; });
}

void rule_sphere_bundle(RuleContext& ctx) {
    const auto& spec = ctx.spec;
    if (spec.kind != ManifoldSpec::Kind::SphereBundle) return;
    int m = spec.fiber_dim;
    int n = spec.base->dimension();
    auto base_profile = betti_profile(*spec.base);

    json evidence{{"fiber_dim", m},
                  {"base_dim", n},
                  {"base_betti", profile_to_json(base_profile)},
                  {"total_betti", profile_to_json(ctx.profile)}};

    if (m == n && m % 2 == 0) {
        evidence["reason"] =
            "even sphere fiber of the base's dimension: the middle trace matrix is forced to the "
            "identity after a finite power and the off-middle traces pair up, so |Fix(f^l)| = "
            "2q lambda^l + o(lambda^l)";
        ctx.add(Conclusion::NoTransitiveAnosov, "Thm 1.1", evidence);
        ctx.add(Conclusion::ParityConstraint, "Addendum 3.6",
                json{{"reason", "the number of basic sets carrying maximal entropy is even"}});
        if (profile_all_at_most_one(base_profile)) {
            evidence["reason"] = "all base Betti numbers are at most 1, so the total space's "
                                 "Lefschetz sequence is bounded";
            ctx.add(Conclusion::NoAnosov, "Thm 1.1", evidence);
        }
    } else if (m > n) {
        evidence["reason"] = "high-dimensional sphere fiber: complementary-degree traces cancel "
                             "pairwise up to the sign (-1)^m";
        ctx.add(Conclusion::NoTransitiveAnosov, "Thm 1.2", evidence);
        if (m % 2 != 0) {
            evidence["reason"] = "odd fiber dimension makes the paired traces cancel exactly, so "
                                 "Fix(f^l) would be empty for every l";
            ctx.add(Conclusion::NoAnosov, "Thm 1.2", evidence);
        } else {
            ctx.add(Conclusion::ParityConstraint, "Addendum 3.6",
                    json{{"reason", "the number of basic sets carrying maximal entropy is even"}});
        }
    }

    // Sphere base: both dimensions pin the Betti numbers down completely.
    if (profile_all_at_most_one(base_profile) && n >= 1) {
        if (m != n) {
            ctx.add(Conclusion::NoAnosov, "Cor 2.2",
                    json{{"reason", "a sphere bundle over a sphere of a different dimension has "
                                    "all Betti numbers at most 1"},
                         {"fiber_dim", m},
                         {"base_dim", n}});
        } else if (m % 2 == 0) {
            ctx.add(Conclusion::NoAnosov, "Cor 2.2",
                    json{{"reason", "equal even dimensions: the bounded middle analysis applies"},
                         {"fiber_dim", m},
                         {"base_dim", n}});
        }
    }
}

void rule_fiber_over_sphere(RuleContext& ctx) {
    const auto& spec = ctx.spec;
    if (spec.kind != ManifoldSpec::Kind::FiberOverSphere) return;
    int m = spec.base_sphere_dim;
    int n = spec.fiber->dimension();
    json evidence{{"base_sphere_dim", m},
                  {"fiber_dim", n},
                  {"total_betti", profile_to_json(ctx.profile)}};
    evidence["reason"] = "fiber bundle over a high-dimensional sphere: complementary-degree "
                         "traces cancel pairwise up to the sign (-1)^m";
    ctx.add(Conclusion::NoTransitiveAnosov, "Thm 1.5", evidence);
    if (m % 2 != 0) {
        evidence["reason"] = "odd base sphere dimension cancels the paired traces exactly";
        ctx.add(Conclusion::NoAnosov, "Thm 1.5", evidence);
    } else {
        ctx.add(Conclusion::ParityConstraint, "Addendum 3.6",
                json{{"reason", "the number of basic sets carrying maximal entropy is even"}});
    }
}

// Sphere product growth rules ------------------------------------------

void rule_sphere_product(RuleContext& ctx) {
    const auto& spec = ctx.spec;
    if (spec.kind != ManifoldSpec::Kind::SphereProduct) return;
    const auto& sp = spec.sphere_product;
    const int e = sp.even_generator_total();

    bool is_torus_times_sphere =
        sp.factors.size() == 2 && sp.factors[0].dim == 1 && sp.factors[1].count == 1;

    // An odd dimension appearing exactly once cancels the whole sequence.
    for (const auto& f : sp.factors) {
        if (f.dim % 2 == 0 || f.count != 1) continue;
        auto blocks = sample_blocks(sp);
        auto t17 = theorem17_check(sp, blocks, f.dim);
        std::string rule = is_torus_times_sphere ? "Thm 1.7 / Cor 1.8" : "Thm 1.7";
        ctx.add(Conclusion::NoAnosov, rule,
                json{{"reason", "S^" + std::to_string(f.dim) +
                                    " appears exactly once; the paired splittings cancel the "
                                    "Lefschetz sequence identically"},
                     {"odd_dim_once", f.dim},
                     {"sample_blocks", blocks_to_json(blocks)},
                     {"sequence", sequence_to_json(t17.sequence_generic)},
                     {"pairing_verified", t17.pairing_verified}});
        break;
    }

    if (e >= 1) {
        auto blocks = sample_blocks(sp);
        auto t16 = theorem16_check(sp, blocks);
        json evidence{{"even_generator_total", e},
                      {"two_to_e", t16.even_power.str()},
                      {"sample_blocks", blocks_to_json(blocks)},
                      {"growth_kind", to_string(t16.growth.kind)},
                      {"detail", t16.verdict}};
        if (t16.excludes_all) {
            // Pure even products: every cup-preserving automorphism has
            // finite order, so the sequence is bounded for every f.
            bool pure_even = std::all_of(sp.factors.begin(), sp.factors.end(),
                                         [](const auto& f) { return f.dim % 2 == 0; });
            if (pure_even) {
                evidence["reason"] = "all factors are even spheres: after a finite power the "
                                     "induced map fixes every generator, so the Lefschetz "
                                     "sequence of every diffeomorphism is bounded";
                if (sp.factors.size() == 1 && sp.factors[0].count == 2) {
                    // Two equal even spheres: the middle solver pins the
                    // induced map to +-Id, the argument used for S^2 x S^2.
                    auto forced = solve_rank2_middle(Int(0), DetConstraint::PlusOne,
                                                     OmegaConstraint::Fixed);
                    json mats = json::array();
                    for (const auto& m : forced) mats.push_back(matrix_to_json(m));
                    evidence["middle_solutions"] = std::move(mats);
                    evidence["middle_solver"] = "A is forced to +-Id on the middle cohomology";
                }
                ctx.add(Conclusion::NoAnosov, "Thm 1.6", std::move(evidence));
            } else {
                evidence["reason"] = "the sample family has no Anosov-compatible growth";
                ctx.add(Conclusion::NoTransitiveAnosov, "Thm 1.6", std::move(evidence));
            }
        } else {
            evidence["reason"] = "the leading coefficient of |Fix(f^l)| carries the factor 2^e "
                                 "with e >= 1, so it can never be 1";
            evidence["leading_coefficient"] = t16.leading_coefficient.str();
            evidence["lambda"] = t16.growth.lambda;
            std::string rule = is_torus_times_sphere ? "Thm 1.6 / Cor 1.8" : "Thm 1.6";
            ctx.add(Conclusion::NoTransitiveAnosov, rule, std::move(evidence));
            ctx.add(Conclusion::ParityConstraint, "Addendum 3.6",
                    json{{"reason", "the number of basic sets carrying maximal entropy is a "
                                    "multiple of 2^e = " +
                                        t16.even_power.str()}});
        }
    }
}

// Intersection form rule -------------------------------------------------

void rule_form_manifold(RuleContext& ctx) {
    const auto& spec = ctx.spec;
    if (spec.kind != ManifoldSpec::Kind::FormManifold) return;
    auto result = theorem110_check(*spec.form, spec.chi_nonzero);
    json chain = json::array();
    for (const auto& step : result.chain)
        chain.push_back(json{{"constraint", step.constraint},
                             {"status", step.status},
                             {"citation", step.citation}});
    json evidence{{"N", static_cast<int>(spec.form->rank())},
                  {"Q", matrix_to_json(spec.form->q)},
                  {"signature", json::array({result.signature.first, result.signature.second})},
                  {"chi_nonzero", spec.chi_nonzero},
                  {"chain", std::move(chain)}};
    if (result.conclusion == "NO_ANOSOV") {
        ctx.add(Conclusion::NoAnosov, "Thm 1.10 / Thm 7.2", std::move(evidence));
    } else {
        json cands = json::array();
        for (const auto& c : result.candidates) cands.push_back(matrix_to_json(c));
        evidence["candidates"] = std::move(cands);
        evidence["caveat"] = "bounded sweep only; the isometry group may be infinite";
        ctx.add(Conclusion::Inconclusive, "Thm 1.10 / Thm 7.2", std::move(evidence));
        ctx.bounded_only = true;
    }
}

} // namespace

std::vector<Int> betti_profile(const ManifoldSpec& spec) {
    switch (spec.kind) {
        case ManifoldSpec::Kind::Ring: return profile_of_ring(spec.ring);
        case ManifoldSpec::Kind::SphereProduct: return profile_of_ring(spec.sphere_product.to_ring());
        case ManifoldSpec::Kind::SphereBundle: {
            int m = spec.fiber_dim;
            int n = spec.base->dimension();
            auto base = betti_profile(*spec.base);
            if (m == n && m % 2 == 0) {
                // Fiber dimension equals the (even) base dimension: the
                // connecting map vanishes and the middle rank grows by one.
                std::vector<Int> out(static_cast<std::size_t>(2 * m) + 1);
                for (int k = 0; k <= 2 * m; ++k) {
                    if (k < m) out[static_cast<std::size_t>(k)] = profile_at(base, k);
                    else if (k == m) out[static_cast<std::size_t>(k)] = profile_at(base, k) + 1;
                    else out[static_cast<std::size_t>(k)] = profile_at(base, k - m);
                }
                return out;
            }
            if (m > n) {
                std::vector<Int> out(static_cast<std::size_t>(m + n) + 1);
                for (int k = 0; k <= m + n; ++k) {
                    if (k <= n) out[static_cast<std::size_t>(k)] = profile_at(base, k);
                    else if (k < m) out[static_cast<std::size_t>(k)] = 0;
                    else out[static_cast<std::size_t>(k)] = profile_at(base, k - m);
                }
                return out;
            }
            throw std::domain_error(
                "outside theorem hypotheses: sphere bundle needs fiber dim > base dim, or equal "
                "and even");
        }
        case ManifoldSpec::Kind::FiberOverSphere: {
            int m = spec.base_sphere_dim;
            int n = spec.fiber->dimension();
            if (m <= n + 1)
                throw std::domain_error(
                    "outside theorem hypotheses: bundle over a sphere needs base dim > fiber dim "
                    "+ 1");
            auto fiber = betti_profile(*spec.fiber);
            std::vector<Int> out(static_cast<std::size_t>(m + n) + 1);
            for (int k = 0; k <= m + n; ++k) {
                if (k <= n) out[static_cast<std::size_t>(k)] = profile_at(fiber, k);
                else if (k < m) out[static_cast<std::size_t>(k)] = 0;
                else out[static_cast<std::size_t>(k)] = profile_at(fiber, k - m);
            }
            return out;
        }
        case ManifoldSpec::Kind::FormManifold: {
            if (!spec.form) throw std::domain_error("form manifold needs a matrix");
            if (spec.form_dim % 4 != 0 || spec.form_dim < 4)
                throw std::domain_error("form manifold dimension must be a positive multiple of 4");
            std::vector<Int> out(static_cast<std::size_t>(spec.form_dim) + 1);
            out.front() = 1;
            out.back() = 1;
            out[static_cast<std::size_t>(spec.form_dim / 2)] = Int(spec.form->rank());
            return out;
        }
    }
    throw std::logic_error("unhandled manifold kind");
}

ObstructionReport apply_rules(const ManifoldSpec& spec) {
    RuleContext ctx{spec, betti_profile(spec), Int(0), {}, false};
    ctx.chi = euler_from_profile(ctx.profile);

    rule_all_betti_at_most_one(ctx);
    rule_codimension_hint(ctx);
    rule_characteristic_class(ctx);
    rule_sphere_bundle(ctx);
    rule_fiber_over_sphere(ctx);
    rule_sphere_product(ctx);
    rule_form_manifold(ctx);

    ObstructionReport report;
    report.betti = ctx.profile;
    report.chi = ctx.chi;
    report.dimension = spec.dimension();
    report.bounded_only = ctx.bounded_only;
    report.assumptions = {
        "orientability reductions: the obstruction arguments pass to orienting covers and finite "
        "powers where needed; these reductions are always available and are assumed, not computed",
        "verdicts about transitive maps additionally assume orientable invariant distributions "
        "where the underlying rule needs them"};

    bool has_no_anosov = std::any_of(ctx.entries.begin(), ctx.entries.end(),
                                     [](const VerdictEntry& v) {
                                         return v.conclusion == Conclusion::NoAnosov;
                                     });
    for (auto& entry : ctx.entries) {
        if (has_no_anosov && (entry.conclusion == Conclusion::NoTransitiveAnosov ||
                              entry.conclusion == Conclusion::ParityConstraint))
            continue;  // implied by the stronger verdict
        report.verdicts.push_back(std::move(entry));
    }

    if (report.verdicts.empty()) {
        json evidence{{"reason", "no obstruction rule applies to this description"}};
        // The hyperbolic witness for products of two equal odd spheres: a
        // ring automorphism hyperbolic on the middle cohomology exists, so no
        // cohomological rule of this engine can ever fire here.
        if (spec.kind == ManifoldSpec::Kind::SphereProduct &&
            spec.sphere_product.factors.size() == 1 &&
            spec.sphere_product.factors[0].dim % 2 == 1 &&
            spec.sphere_product.factors[0].count == 2) {
            IntMatrix cat{{Int(2), Int(1)}, {Int(1), Int(1)}};
            evidence["witness"] =
                json{{"description", "the product admits diffeomorphism-candidates acting "
                                     "hyperbolically on the middle cohomology"},
                     {"hyperbolic_action", matrix_to_json(cat)},
                     {"degree", spec.sphere_product.factors[0].dim}};
        }
        report.verdicts.push_back(VerdictEntry{Conclusion::Inconclusive, "none", evidence});
    }
    return report;
}

} // namespace anosov
