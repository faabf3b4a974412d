#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "anosov/json_io.hpp"
#include "anosov/roots.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

// Arbitrary-precision values cross the boundary as Python ints via their
// decimal string form.
py::object int_to_py(const anosov::Int& v) {
    return py::int_(py::str(v.str()));
}

anosov::Int int_from_py(const py::handle& h) {
    return anosov::Int(py::str(h).cast<std::string>());
}

anosov::IntMatrix matrix_from_py(const py::sequence& rows) {
    std::size_t r = rows.size();
    if (r == 0) return anosov::IntMatrix(0, 0);
    std::size_t c = py::len(rows[0]);
    anosov::IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        py::sequence row = rows[i].cast<py::sequence>();
        if (row.size() != c) throw py::value_error("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = int_from_py(row[j]);
    }
    return m;
}

py::list matrix_to_py(const anosov::IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(int_to_py(m.at(i, j)));
        rows.append(std::move(row));
    }
    return rows;
}

py::object json_to_py(const json& j) {
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

anosov::TraceConvention convention_from(const std::string& name) {
    if (name == "inverse") return anosov::TraceConvention::InverseTraces;
    if (name == "forward") return anosov::TraceConvention::ForwardTraces;
    throw py::value_error("convention must be 'inverse' or 'forward'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact cohomological obstructions to (transitive) Anosov diffeomorphisms";

    py::class_<anosov::GradedRingDescription>(m, "GradedRing")
        .def(py::init([](const std::string& spec_json) {
                 return anosov::ring_from_json(json::parse(spec_json));
             }),
             py::arg("spec_json"))
        .def_static("sphere_product",
                    [](const std::vector<std::pair<int, int>>& factors) {
                        return anosov::sphere_product_ring(factors);
                    })
        .def_static("torus", &anosov::torus_ring)
        .def_static("projective_space", &anosov::projective_space_ring)
        .def("top_degree", &anosov::GradedRingDescription::top_degree)
        .def("betti", [](const anosov::GradedRingDescription& r, int d) { return anosov::betti(r, d); })
        .def("euler_characteristic",
             [](const anosov::GradedRingDescription& r) {
                 return int_to_py(anosov::euler_characteristic(r));
             })
        .def("basis",
             [](const anosov::GradedRingDescription& r, int d) {
                 py::list out;
                 for (const auto& mono : anosov::build_basis(r, d))
                     out.append(mono.to_string(r));
                 return out;
             })
        .def("cup",
             [](const anosov::GradedRingDescription& r, const std::string& a, const std::string& b) {
                 auto ma = anosov::monomial_from_json(r, json::parse(a));
                 auto mb = anosov::monomial_from_json(r, json::parse(b));
                 auto prod = anosov::cup(r, ma, mb);
                 if (prod.zero) return py::make_tuple(0, py::str(""));
                 return py::make_tuple(prod.sign, py::str(prod.monomial.to_string(r)));
             })
        .def("intersection_pairing",
             [](const anosov::GradedRingDescription& r, int d) {
                 return matrix_to_py(anosov::intersection_pairing(r, d));
             })
        .def("to_json", [](const anosov::GradedRingDescription& r) {
            return anosov::to_json(r).dump();
        });

    py::class_<anosov::GradedAutomorphism>(m, "GradedAutomorphism")
        .def("matrix",
             [](const anosov::GradedAutomorphism& a, int d) { return matrix_to_py(a.matrix(d)); })
        .def("top_degree", &anosov::GradedAutomorphism::top_degree)
        .def("to_json", [](const anosov::GradedAutomorphism& a) { return anosov::to_json(a).dump(); });

    m.def("induce",
          [](const anosov::GradedRingDescription& ring, const py::dict& images) {
              anosov::GeneratorImages gi;
              for (auto item : images) {
                  std::vector<anosov::Int> row;
                  for (auto v : item.second.cast<py::sequence>()) row.push_back(int_from_py(v));
                  gi.images[item.first.cast<std::string>()] = std::move(row);
              }
              return anosov::induce(ring, gi);
          },
          py::arg("ring"), py::arg("images"),
          "Extend generator images (label -> coordinate list) to the full graded automorphism");

    m.def("check_cup_preservation",
          [](const anosov::GradedRingDescription& ring, const anosov::GradedAutomorphism& aut) {
              py::list out;
              for (const auto& v : anosov::check_cup_preservation(ring, aut))
                  out.append(py::make_tuple(v.d, v.e, v.i, v.j));
              return out;
          });

    m.def("duality_check", &anosov::duality_check);

    m.def("exterior_power",
          [](const py::sequence& a, int k) { return matrix_to_py(anosov::exterior_power(matrix_from_py(a), k)); });
    m.def("kronecker", [](const py::sequence& a, const py::sequence& b) {
        return matrix_to_py(anosov::kronecker(matrix_from_py(a), matrix_from_py(b)));
    });

    m.def("solve_rank2_middle",
          [](long long q, const std::string& det, const std::string& omega) {
              anosov::DetConstraint dc = det == "+1"  ? anosov::DetConstraint::PlusOne
                                         : det == "-1" ? anosov::DetConstraint::MinusOne
                                                       : anosov::DetConstraint::Both;
              anosov::OmegaConstraint oc = omega == "fixed" ? anosov::OmegaConstraint::Fixed
                                                            : anosov::OmegaConstraint::AnySign;
              py::list out;
              for (const auto& mat : anosov::solve_rank2_middle(anosov::Int(q), dc, oc))
                  out.append(matrix_to_py(mat));
              return out;
          },
          py::arg("q"), py::arg("det") = "+1", py::arg("omega") = "fixed");

    m.def("lefschetz_sequence",
          [](const anosov::GradedAutomorphism& aut, unsigned long max_l, const std::string& conv) {
              auto seq = anosov::lefschetz_sequence(aut, max_l, convention_from(conv));
              py::list out;
              for (const auto& v : seq.values) out.append(int_to_py(v));
              return out;
          },
          py::arg("aut"), py::arg("max_l") = 30, py::arg("convention") = "inverse");

    m.def("growth_analysis",
          [](const anosov::GradedAutomorphism& aut, const std::string& conv, double tol) {
              return json_to_py(anosov::to_json(anosov::growth_analysis(aut, convention_from(conv), tol)));
          },
          py::arg("aut"), py::arg("convention") = "inverse", py::arg("tolerance") = 1e-9);

    m.def("anosov_compatibility",
          [](const anosov::GradedAutomorphism& aut, const std::string& conv) {
              return json_to_py(anosov::to_json(anosov::anosov_compatibility(aut, convention_from(conv))));
          },
          py::arg("aut"), py::arg("convention") = "inverse");

    m.def("block_table",
          [](const std::string& spec_json, const py::dict& blocks) {
              auto spec = anosov::sphere_spec_from_json(json::parse(spec_json));
              anosov::GeneratorBlocks gb;
              for (auto item : blocks)
                  gb.by_dim[item.first.cast<int>()] = matrix_from_py(item.second.cast<py::sequence>());
              return json_to_py(anosov::block_table_to_json(spec, anosov::block_table(spec, gb)));
          });

    m.def("enumerate_isometries",
          [](const py::sequence& q, long bound) {
              anosov::UnimodularForm form(matrix_from_py(q));
              auto list = anosov::enumerate_isometries(form, bound);
              py::list elems;
              for (const auto& a : list.elements) elems.append(matrix_to_py(a));
              return py::make_tuple(elems, list.completeness == anosov::Completeness::Certified
                                               ? "CERTIFIED"
                                               : "BOUNDED_ONLY");
          },
          py::arg("q"), py::arg("entry_bound") = 3);

    m.def("power_stabilize", [](const py::sequence& a) {
        auto result = anosov::power_stabilize(matrix_from_py(a));
        return py::make_tuple(result.exponent, matrix_to_py(result.power));
    });

    m.def("theorem110_check",
          [](const py::sequence& q, bool chi_nonzero, long bound) {
              anosov::UnimodularForm form(matrix_from_py(q));
              return json_to_py(anosov::to_json(anosov::theorem110_check(form, chi_nonzero, bound)));
          },
          py::arg("q"), py::arg("chi_nonzero") = false, py::arg("bound") = 3);

    m.def("fixed_point_count", [](const py::sequence& a, unsigned long l) {
        anosov::ToralMap map(matrix_from_py(a));
        return int_to_py(anosov::fixed_point_count(map, l));
    });
    m.def("smith_count", [](const py::sequence& a, unsigned long l) {
        anosov::ToralMap map(matrix_from_py(a));
        return int_to_py(anosov::smith_count(map, l));
    });
    m.def("oracle_cross_check", [](const py::sequence& a, unsigned long max_l) {
        anosov::ToralMap map(matrix_from_py(a));
        return json_to_py(anosov::to_json(anosov::lefschetz_cross_check(map, max_l)));
    });

    m.def("analyze",
          [](const std::string& spec_json) {
              auto spec = anosov::manifold_spec_from_json(json::parse(spec_json));
              return json_to_py(anosov::to_json(anosov::apply_rules(spec)));
          },
          py::arg("spec_json"), "Full obstruction report for a manifold spec (JSON string)");

    m.def("betti_profile", [](const std::string& spec_json) {
        auto spec = anosov::manifold_spec_from_json(json::parse(spec_json));
        py::list out;
        for (const auto& b : anosov::betti_profile(spec)) out.append(int_to_py(b));
        return out;
    });

    m.def("section7_tables", []() { return anosov::render_section7_tables(); });
}
