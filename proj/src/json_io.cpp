#include "anosov/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace anosov {

using nlohmann::json;

namespace {

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::domain_error("expected an integer or a decimal string, got " + j.dump());
}

json int_to_json(const Int& v) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return json(v.convert_to<long long>());
    return json(v.str());
}

const json& require(const json& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end())
        throw std::domain_error(std::string("missing field '") + field + "' in " +
                                j.dump().substr(0, 120));
    return *it;
}

} // namespace

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix int_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::domain_error("matrix must be a non-empty array of rows");
    std::size_t rows = j.size();
    std::size_t cols = j.at(0).size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw std::domain_error("matrix row " + std::to_string(i) + " has wrong length");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = int_from_json(row.at(c));
    }
    return m;
}

json to_json(const GradedRingDescription& ring) {
    json gens = json::array();
    for (const auto& g : ring.generators())
        gens.push_back(json{{"label", g.label}, {"degree", g.degree}, {"nilpotency", g.nilpotency}});
    return json{{"generators", std::move(gens)}};
}

GradedRingDescription ring_from_json(const json& j) {
    std::vector<Generator> gens;
    for (const auto& g : require(j, "generators")) {
        Generator gen;
        gen.label = require(g, "label").get<std::string>();
        gen.degree = require(g, "degree").get<int>();
        gen.nilpotency = g.value("nilpotency", 2);
        gens.push_back(std::move(gen));
    }
    return GradedRingDescription(std::move(gens));
}

json monomial_to_json(const GradedRingDescription& ring, const Monomial& m) {
    json out = json::object();
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        if (m.exponents[i] != 0) out[ring.generators()[i].label] = m.exponents[i];
    return out;
}

Monomial monomial_from_json(const GradedRingDescription& ring, const json& j) {
    Monomial m;
    m.exponents.assign(ring.generators().size(), 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int idx = ring.generator_index(it.key());
        if (idx < 0) throw std::domain_error("unknown generator label '" + it.key() + "'");
        m.exponents[static_cast<std::size_t>(idx)] = it.value().get<int>();
    }
    return m;
}

json to_json(const GradedAutomorphism& aut) {
    json mats = json::object();
    for (int d = 0; d <= aut.top_degree(); ++d) mats[std::to_string(d)] = to_json(aut.matrix(d));
    return json{{"degree_matrices", std::move(mats)}};
}

GradedAutomorphism automorphism_from_json(const json& j) {
    const json& mats = require(j, "degree_matrices");
    int top = -1;
    for (auto it = mats.begin(); it != mats.end(); ++it) top = std::max(top, std::stoi(it.key()));
    GradedAutomorphism aut;
    for (int d = 0; d <= top; ++d) {
        auto it = mats.find(std::to_string(d));
        if (it == mats.end())
            throw std::domain_error("degree_matrices is missing degree " + std::to_string(d));
        aut.degree_matrices.push_back(int_matrix_from_json(*it));
    }
    return aut;
}

GeneratorImages generator_images_from_json(const json& j) {
    GeneratorImages images;
    for (auto it = require(j, "images").begin(); it != require(j, "images").end(); ++it) {
        std::vector<Int> row;
        for (const auto& v : it.value()) row.push_back(int_from_json(v));
        images.images[it.key()] = std::move(row);
    }
    return images;
}

json to_json(const SphereProductSpec& spec) {
    json factors = json::array();
    for (const auto& f : spec.factors)
        factors.push_back(json{{"dim", f.dim}, {"count", f.count}});
    return json{{"factors", std::move(factors)}};
}

SphereProductSpec sphere_spec_from_json(const json& j) {
    SphereProductSpec spec;
    for (const auto& f : require(j, "factors"))
        spec.factors.push_back(
            SphereProductSpec::Factor{require(f, "dim").get<int>(), require(f, "count").get<int>()});
    spec.validate();
    return spec;
}

GeneratorBlocks generator_blocks_from_json(const SphereProductSpec& spec, const json& j) {
    GeneratorBlocks blocks;
    for (auto it = j.begin(); it != j.end(); ++it)
        blocks.by_dim[std::stoi(it.key())] = int_matrix_from_json(it.value());
    blocks.validate(spec);
    return blocks;
}

json to_json(const LefschetzSequence& seq) {
    json values = json::array();
    for (const auto& v : seq.values) values.push_back(v.str());
    return json{{"convention", seq.convention == TraceConvention::InverseTraces ? "inverse"
                                                                                : "forward"},
                {"values", std::move(values)}};
}

std::string sequence_to_csv(const LefschetzSequence& seq) {
    std::ostringstream os;
    os << "l,lambda\n";
    for (std::size_t l = 1; l <= seq.values.size(); ++l)
        os << l << "," << seq.values[l - 1].str() << "\n";
    return os.str();
}

json to_json(const SpectralSummary& summary) {
    json groups = json::array();
    for (const auto& g : summary.groups)
        groups.push_back(json{{"modulus", g.modulus}, {"signed_multiplicity", g.signed_multiplicity}});
    return json{{"groups", std::move(groups)},
                {"entropy", summary.entropy},
                {"bounded", summary.bounded}};
}

json to_json(const GrowthVerdict& verdict) {
    return json{{"kind", to_string(verdict.kind)},
                {"lambda", verdict.lambda},
                {"coefficient", verdict.coefficient},
                {"varies_with_residue", verdict.varies_with_residue},
                {"residue_period", verdict.residue_period},
                {"notes", verdict.notes}};
}

json block_table_to_json(const SphereProductSpec& spec, const BlockDecomposition& table) {
    json degrees = json::array();
    for (std::size_t d = 0; d < table.per_degree.size(); ++d) {
        json entries = json::array();
        for (const auto& entry : table.per_degree[d]) {
            json alpha = json::array();
            for (int a : entry.splitting.alpha) alpha.push_back(a);
            entries.push_back(json{{"splitting", std::move(alpha)},
                                   {"label", entry.label},
                                   {"multiplicity", entry.multiplicity.str()},
                                   {"block", to_json(entry.matrix)}});
        }
        degrees.push_back(json{{"degree", d}, {"blocks", std::move(entries)}});
    }
    return json{{"spec", to_json(spec)},
                {"even_generator_total", table.even_generator_total},
                {"degrees", std::move(degrees)}};
}

std::string block_table_to_text(const BlockDecomposition& table) {
    std::ostringstream os;
    for (std::size_t d = 0; d < table.per_degree.size(); ++d) {
        os << "f*" << d << " = upp.tr(";
        bool first = true;
        for (const auto& entry : table.per_degree[d]) {
            long copies = entry.multiplicity.convert_to<long>();
            if (entry.label == "Id") {
                // Even splittings collapse to one identity block of their size.
                if (!first) os << ", ";
                os << "Id_" << copies;
                first = false;
                continue;
            }
            for (long c = 0; c < copies; ++c) {
                if (!first) os << ", ";
                os << entry.label;
                first = false;
            }
        }
        os << ")\n";
    }
    return os.str();
}

ManifoldSpec manifold_spec_from_json(const json& j) {
    ManifoldSpec spec;
    std::string type = require(j, "type").get<std::string>();
    if (type == "sphere_product") {
        spec.kind = ManifoldSpec::Kind::SphereProduct;
        spec.sphere_product = sphere_spec_from_json(j);
    } else if (type == "ring") {
        spec.kind = ManifoldSpec::Kind::Ring;
        spec.ring = ring_from_json(j);
    } else if (type == "sphere_bundle") {
        spec.kind = ManifoldSpec::Kind::SphereBundle;
        spec.fiber_dim = require(j, "fiber_dim").get<int>();
        spec.base = std::make_shared<ManifoldSpec>(manifold_spec_from_json(require(j, "base")));
    } else if (type == "fiber_over_sphere") {
        spec.kind = ManifoldSpec::Kind::FiberOverSphere;
        spec.base_sphere_dim = require(j, "base_sphere_dim").get<int>();
        spec.fiber = std::make_shared<ManifoldSpec>(manifold_spec_from_json(require(j, "fiber")));
    } else if (type == "form_manifold") {
        spec.kind = ManifoldSpec::Kind::FormManifold;
        spec.form.emplace(int_matrix_from_json(require(j, "Q")));
        spec.form_dim = j.value("dim", 4);
        spec.highly_connected = j.value("connected", true);
        spec.chi_nonzero = j.value("chi_nonzero", false);
    } else {
        throw std::domain_error("unknown manifold type '" + type + "'");
    }
    spec.has_nonzero_exponential_char_class =
        j.value("has_nonzero_exponential_char_class", false);
    if (j.contains("codimension_hint")) spec.codimension_hint = j["codimension_hint"].get<int>();
    return spec;
}

json to_json(const ObstructionReport& report) {
    json verdicts = json::array();
    for (const auto& v : report.verdicts)
        verdicts.push_back(json{{"conclusion", to_string(v.conclusion)},
                                {"rule", v.rule},
                                {"evidence", v.evidence}});
    json betti = json::array();
    for (const auto& b : report.betti) betti.push_back(b.str());
    return json{{"verdicts", std::move(verdicts)},
                {"betti_profile", std::move(betti)},
                {"chi", report.chi.str()},
                {"dimension", report.dimension},
                {"assumptions", report.assumptions},
                {"bounded_only", report.bounded_only}};
}

std::string report_to_text(const ObstructionReport& report) {
    std::ostringstream os;
    os << "dimension: " << report.dimension << "\n";
    os << "betti profile: (";
    for (std::size_t i = 0; i < report.betti.size(); ++i) {
        os << report.betti[i].str();
        if (i + 1 < report.betti.size()) os << ", ";
    }
    os << ")\n";
    os << "euler characteristic: " << report.chi.str() << "\n";
    for (const auto& v : report.verdicts) {
        os << to_string(v.conclusion) << "  [" << v.rule << "]";
        if (v.evidence.contains("reason"))
            os << "  " << v.evidence["reason"].get<std::string>();
        os << "\n";
    }
    if (report.bounded_only)
        os << "caveat: at least one verdict rests on a bounded enumeration\n";
    return os.str();
}

json to_json(const CrossCheckReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows)
        rows.push_back(json{{"l", r.l},
                            {"lefschetz", r.lefschetz.str()},
                            {"det_count", r.det_count.str()},
                            {"smith_count", r.smith.str()}});
    return json{{"rows", std::move(rows)},
                {"lambda", report.lambda},
                {"coefficient", report.coefficient},
                {"expanding_product", report.expanding_product},
                {"ok", report.ok}};
}

std::string cross_check_to_csv(const CrossCheckReport& report) {
    std::ostringstream os;
    os << "l,lefschetz,det_count,smith_count\n";
    for (const auto& r : report.rows)
        os << r.l << "," << r.lefschetz.str() << "," << r.det_count.str() << "," << r.smith.str()
           << "\n";
    return os.str();
}

json to_json(const Theorem110Result& result) {
    json chain = json::array();
    for (const auto& step : result.chain)
        chain.push_back(json{{"constraint", step.constraint},
                             {"status", step.status},
                             {"citation", step.citation}});
    json cands = json::array();
    for (const auto& c : result.candidates) cands.push_back(to_json(c));
    return json{{"conclusion", result.conclusion},
                {"signature", json::array({result.signature.first, result.signature.second})},
                {"chain", std::move(chain)},
                {"candidates", std::move(cands)},
                {"bounded_only", result.bounded_only}};
}

} // namespace anosov
