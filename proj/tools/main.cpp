#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "anosov/json_io.hpp"

namespace {

using nlohmann::json;

// Parse with a line/column diagnostic on failure.
json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < err.byte && i < text.size(); ++i) {
            if (text[i] == '\n') { ++line; col = 1; }
            else ++col;
        }
        throw std::domain_error(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                ": " + err.what());
    }
}

// Inline JSON or @file reference.
json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return load_json_file(arg.substr(1));
    try {
        return json::parse(arg);
    } catch (const json::parse_error& err) {
        throw std::domain_error(std::string("inline JSON: ") + err.what());
    }
}

void emit(const json& j, const std::string& format, const std::string& text_rendering) {
    if (format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text_rendering;
}

anosov::TraceConvention convention_from(const std::string& name) {
    if (name == "inverse") return anosov::TraceConvention::InverseTraces;
    if (name == "forward") return anosov::TraceConvention::ForwardTraces;
    throw std::domain_error("convention must be 'inverse' or 'forward'");
}

int run(int argc, char** argv) {
    CLI::App app{"Exact cohomological obstructions to (transitive) Anosov diffeomorphisms"};
    app.require_subcommand(1);

    // ---- ring ----
    auto* ring_cmd = app.add_subcommand("ring", "graded cohomology ring operations");
    ring_cmd->require_subcommand(1);

    std::string ring_path, format = "json";
    int betti_degree = -1;
    auto* ring_betti = ring_cmd->add_subcommand("betti", "Betti numbers and Euler characteristic");
    ring_betti->add_option("--ring", ring_path, "ring description JSON file")->required();
    ring_betti->add_option("-d,--degree", betti_degree, "single degree (default: all)");
    ring_betti->add_option("--format", format, "json|table");

    std::string cup_a, cup_b;
    auto* ring_cup = ring_cmd->add_subcommand("cup", "cup product of two basis monomials");
    ring_cup->add_option("--ring", ring_path, "ring description JSON file")->required();
    ring_cup->add_option("--a", cup_a, "first monomial (JSON exponent map or @file)")->required();
    ring_cup->add_option("--b", cup_b, "second monomial")->required();
    ring_cup->add_option("--format", format, "json|table");

    // ---- sphere-product ----
    auto* sp_cmd = app.add_subcommand("sphere-product", "splitting/block machinery for sphere products");
    sp_cmd->require_subcommand(1);

    std::string spec_path, blocks_path;
    auto* sp_blocks = sp_cmd->add_subcommand("blocks", "per-degree diagonal block table");
    sp_blocks->add_option("spec", spec_path, "sphere product JSON file")->required();
    sp_blocks->add_option("--blocks", blocks_path, "generator blocks JSON file (default: identities)");
    sp_blocks->add_option("--format", format, "json|table");

    auto* sp_analyze = sp_cmd->add_subcommand("analyze", "growth checks for the product");
    sp_analyze->add_option("spec", spec_path, "sphere product JSON file")->required();
    sp_analyze->add_option("--blocks", blocks_path, "generator blocks JSON file");
    sp_analyze->add_option("--format", format, "json|table");

    // ---- lefschetz ----
    std::string aut_path, images_path, convention = "inverse";
    unsigned long max_l = 30;
    auto* lef_cmd = app.add_subcommand("lefschetz", "exact Lefschetz sequence and growth summary");
    lef_cmd->add_option("--ring", ring_path, "ring description JSON file")->required();
    lef_cmd->add_option("--aut", aut_path, "automorphism JSON (degree_matrices form)");
    lef_cmd->add_option("--images", images_path, "generator images JSON (induced automorphism)");
    lef_cmd->add_option("--convention", convention, "inverse|forward (default inverse)");
    lef_cmd->add_option("-L,--length", max_l, "sequence length (default 30)");
    lef_cmd->add_option("--format", format, "json|csv|table");

    // ---- form ----
    auto* form_cmd = app.add_subcommand("form", "unimodular intersection forms");
    form_cmd->require_subcommand(1);

    std::string matrix_path;
    bool chi_nonzero = false;
    long bound = 3;
    auto* form_analyze = form_cmd->add_subcommand("analyze", "isometry group and growth obstruction");
    form_analyze->add_option("--matrix", matrix_path, "form matrix JSON file")->required();
    form_analyze->add_flag("--chi-nonzero", chi_nonzero, "the Euler characteristic is nonzero");
    form_analyze->add_option("--bound", bound, "entry bound for the sweep (default 3)");
    form_analyze->add_option("--format", format, "json|table");

    auto* form_tables = form_cmd->add_subcommand("tables", "the four rank-2 isometry groups");

    // ---- oracle ----
    auto* oracle_cmd = app.add_subcommand("oracle", "hyperbolic toral ground truth");
    oracle_cmd->require_subcommand(1);
    unsigned long oracle_l = 10;
    std::string oracle_format = "csv";
    auto* oracle_cc = oracle_cmd->add_subcommand("cross-check",
                                                 "Lefschetz vs det vs Smith fixed-point counts");
    oracle_cc->add_option("--matrix", matrix_path, "integer matrix JSON file")->required();
    oracle_cc->add_option("-L,--length", oracle_l, "iterates to check (default 10)");
    oracle_cc->add_option("--format", oracle_format, "csv|json (default csv)");

    // ---- analyze ----
    std::string manifold_path;
    auto* analyze_cmd = app.add_subcommand("analyze", "full obstruction report for a manifold spec");
    analyze_cmd->add_option("spec", manifold_path, "manifold spec JSON file")->required();
    analyze_cmd->add_option("--format", format, "json|table");

    CLI11_PARSE(app, argc, argv);

    if (ring_betti->parsed()) {
        auto ring = anosov::ring_from_json(load_json_file(ring_path));
        json out;
        std::ostringstream text;
        if (betti_degree >= 0) {
            out = json{{"degree", betti_degree}, {"betti", anosov::betti(ring, betti_degree)}};
            text << "b_" << betti_degree << " = " << anosov::betti(ring, betti_degree) << "\n";
        } else {
            json profile = json::array();
            for (int d = 0; d <= ring.top_degree(); ++d) profile.push_back(anosov::betti(ring, d));
            out = json{{"betti", profile}, {"chi", anosov::euler_characteristic(ring).str()}};
            text << "betti: " << profile.dump() << "\nchi: "
                 << anosov::euler_characteristic(ring).str() << "\n";
        }
        emit(out, format, text.str());
        return 0;
    }
    if (ring_cup->parsed()) {
        auto ring = anosov::ring_from_json(load_json_file(ring_path));
        auto a = anosov::monomial_from_json(ring, load_json_arg(cup_a));
        auto b = anosov::monomial_from_json(ring, load_json_arg(cup_b));
        auto prod = anosov::cup(ring, a, b);
        json out;
        std::ostringstream text;
        if (prod.zero) {
            out = json{{"zero", true}};
            text << "0\n";
        } else {
            out = json{{"zero", false},
                       {"sign", prod.sign},
                       {"monomial", anosov::monomial_to_json(ring, prod.monomial)}};
            text << (prod.sign < 0 ? "-" : "+") << prod.monomial.to_string(ring) << "\n";
        }
        emit(out, format, text.str());
        return 0;
    }
    if (sp_blocks->parsed() || sp_analyze->parsed()) {
        auto spec = anosov::sphere_spec_from_json(load_json_file(spec_path));
        anosov::GeneratorBlocks blocks;
        if (!blocks_path.empty()) {
            blocks = anosov::generator_blocks_from_json(spec, load_json_file(blocks_path));
        } else {
            for (const auto& f : spec.factors)
                if (f.dim % 2 != 0)
                    blocks.by_dim[f.dim] =
                        anosov::IntMatrix::identity(static_cast<std::size_t>(f.count));
        }
        if (sp_blocks->parsed()) {
            auto table = anosov::block_table(spec, blocks);
            emit(anosov::block_table_to_json(spec, table), format,
                 anosov::block_table_to_text(table));
            return 0;
        }
        json out = json::object();
        std::ostringstream text;
        if (spec.even_generator_total() >= 1) {
            auto r16 = anosov::theorem16_check(spec, blocks);
            out["even_factor_check"] = json{{"verdict", r16.verdict},
                                            {"growth", anosov::to_json(r16.growth)},
                                            {"two_to_e", r16.even_power.str()},
                                            {"leading_coefficient", r16.leading_coefficient.str()}};
            text << r16.verdict << "\n";
        }
        for (const auto& f : spec.factors)
            if (f.dim % 2 != 0 && f.count == 1) {
                auto r17 = anosov::theorem17_check(spec, blocks, f.dim);
                out["odd_once_check"] = json{{"k", f.dim},
                                             {"verdict", r17.verdict},
                                             {"pairing_verified", r17.pairing_verified}};
                text << r17.verdict << "\n";
                break;
            }
        if (out.empty()) {
            out["note"] = "no growth rule applies (no even factor, no odd dimension of "
                          "multiplicity one)";
            text << out["note"].get<std::string>() << "\n";
        }
        emit(out, format, text.str());
        return 0;
    }
    if (lef_cmd->parsed()) {
        auto ring = anosov::ring_from_json(load_json_file(ring_path));
        anosov::GradedAutomorphism aut;
        if (!aut_path.empty()) {
            aut = anosov::automorphism_from_json(load_json_file(aut_path));
            anosov::validate_automorphism(ring, aut);
        } else if (!images_path.empty()) {
            aut = anosov::induce(ring, anosov::generator_images_from_json(load_json_file(images_path)));
        } else {
            throw std::domain_error("lefschetz needs --aut or --images");
        }
        auto conv = convention_from(convention);
        auto seq = anosov::lefschetz_sequence(aut, max_l, conv);
        auto summary = anosov::growth_analysis(aut, conv);
        auto verdict = anosov::anosov_compatibility(aut, conv);
        if (format == "csv") {
            std::cout << anosov::sequence_to_csv(seq);
            return 0;
        }
        json out{{"sequence", anosov::to_json(seq)},
                 {"growth", anosov::to_json(summary)},
                 {"verdict", anosov::to_json(verdict)}};
        std::ostringstream text;
        text << anosov::sequence_to_csv(seq) << "kind: " << anosov::to_string(verdict.kind)
             << "  lambda: " << verdict.lambda << "  coefficient: " << verdict.coefficient << "\n";
        emit(out, format, text.str());
        return 0;
    }
    if (form_analyze->parsed()) {
        anosov::UnimodularForm form(anosov::int_matrix_from_json(load_json_file(matrix_path)));
        auto result = anosov::theorem110_check(form, chi_nonzero, bound);
        auto isometries = anosov::enumerate_isometries(form, bound);
        json out = anosov::to_json(result);
        out["isometries"] = json::object();
        out["isometries"]["completeness"] =
            isometries.completeness == anosov::Completeness::Certified ? "CERTIFIED" : "BOUNDED_ONLY";
        out["isometries"]["count"] = isometries.elements.size();
        json elems = json::array();
        for (const auto& a : isometries.elements) {
            if (elems.size() >= 64) break;
            elems.push_back(anosov::to_json(a));
        }
        out["isometries"]["elements"] = std::move(elems);
        if (isometries.elements.size() > 64) out["isometries"]["elements_truncated"] = true;
        std::ostringstream text;
        text << result.conclusion << "\n";
        for (const auto& step : result.chain)
            text << "  " << step.constraint << ": " << step.status << " [" << step.citation << "]\n";
        emit(out, format, text.str());
        return result.bounded_only ? 3 : 0;
    }
    if (form_tables->parsed()) {
        std::cout << anosov::render_section7_tables();
        return 0;
    }
    if (oracle_cc->parsed()) {
        anosov::ToralMap map(anosov::int_matrix_from_json(load_json_file(matrix_path)));
        auto report = anosov::lefschetz_cross_check(map, oracle_l);
        if (oracle_format == "json") std::cout << anosov::to_json(report).dump(2) << "\n";
        else std::cout << anosov::cross_check_to_csv(report);
        return 0;
    }
    if (analyze_cmd->parsed()) {
        auto spec = anosov::manifold_spec_from_json(load_json_file(manifold_path));
        auto report = anosov::apply_rules(spec);
        emit(anosov::to_json(report), format, anosov::report_to_text(report));
        bool inconclusive_bounded =
            report.bounded_only &&
            std::any_of(report.verdicts.begin(), report.verdicts.end(), [](const auto& v) {
                return v.conclusion == anosov::Conclusion::Inconclusive;
            });
        return inconclusive_bounded ? 3 : 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
