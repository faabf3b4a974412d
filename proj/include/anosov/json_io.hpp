#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "anosov/automorphism.hpp"
#include "anosov/graded_ring.hpp"
#include "anosov/intersection_form.hpp"
#include "anosov/lefschetz.hpp"
#include "anosov/sphere_products.hpp"
#include "anosov/toral_oracle.hpp"
#include "anosov/verdict.hpp"

namespace anosov {

// Integer matrices are arrays of arrays; entries may be JSON numbers or
// decimal strings (strings keep arbitrary precision round-trippable).
nlohmann::json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);

// Ring schema: {"generators":[{"label":"x1^1","degree":1,"nilpotency":2},...]}
nlohmann::json to_json(const GradedRingDescription& ring);
GradedRingDescription ring_from_json(const nlohmann::json& j);

// Monomials serialize sparsely: {"x1^1": 1, "x1^2": 2}; zero exponents omitted.
nlohmann::json monomial_to_json(const GradedRingDescription& ring, const Monomial& m);
Monomial monomial_from_json(const GradedRingDescription& ring, const nlohmann::json& j);

// Automorphism schema: {"degree_matrices": {"0": [[1]], "1": [[...]], ...}}
nlohmann::json to_json(const GradedAutomorphism& aut);
GradedAutomorphism automorphism_from_json(const nlohmann::json& j);

// Generator-image schema: {"images": {"x1^1": [2,1], ...}}
GeneratorImages generator_images_from_json(const nlohmann::json& j);

// Sphere product schema: {"factors":[{"dim":1,"count":2},...]}
nlohmann::json to_json(const SphereProductSpec& spec);
SphereProductSpec sphere_spec_from_json(const nlohmann::json& j);

// Generator blocks: {"3": [[2,1],[1,1]], ...} keyed by odd sphere dimension.
GeneratorBlocks generator_blocks_from_json(const SphereProductSpec& spec, const nlohmann::json& j);

nlohmann::json to_json(const LefschetzSequence& seq);
std::string sequence_to_csv(const LefschetzSequence& seq);

nlohmann::json to_json(const SpectralSummary& summary);
nlohmann::json to_json(const GrowthVerdict& verdict);

nlohmann::json block_table_to_json(const SphereProductSpec& spec, const BlockDecomposition& table);
/// Human-readable table in the upp.tr(...) layout, one line per degree.
std::string block_table_to_text(const BlockDecomposition& table);

// Manifold spec: tagged union keyed by "type":
//   {"type":"sphere_product","factors":[...]}
//   {"type":"ring","generators":[...]}
//   {"type":"sphere_bundle","fiber_dim":m,"base":{...}}
//   {"type":"fiber_over_sphere","base_sphere_dim":m,"fiber":{...}}
//   {"type":"form_manifold","Q":[[...]],"dim":4,"chi_nonzero":true}
// plus optional flags "has_nonzero_exponential_char_class", "codimension_hint".
ManifoldSpec manifold_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ObstructionReport& report);
std::string report_to_text(const ObstructionReport& report);

nlohmann::json to_json(const CrossCheckReport& report);
std::string cross_check_to_csv(const CrossCheckReport& report);

nlohmann::json to_json(const Theorem110Result& result);

} // namespace anosov
