#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "weylift/catalog.hpp"
#include "weylift/liealg.hpp"
#include "weylift/lifts.hpp"
#include "weylift/quat.hpp"
#include "weylift/report.hpp"
#include "weylift/rootdata.hpp"
#include "weylift/suites.hpp"

namespace py = pybind11;
using namespace weylift;

namespace {

TypeLabel parse_type(const std::string& t) {
    if (t.size() != 1) throw std::invalid_argument("type must be one of A, B, C, D");
    return type_from_char(t[0]);
}

}  // namespace

PYBIND11_MODULE(_weylift, m) {
    m.doc() = "Exact lifts of Weyl groups into classical matrix groups: root data, "
              "verification suites and finite group closures over cyclotomic numbers.";

    m.def(
        "cartan_matrix",
        [](const std::string& type, int rank) {
            return build_root_datum(parse_type(type), rank).cartan;
        },
        py::arg("type"), py::arg("rank"), "Cartan matrix as a list of integer rows.");

    m.def(
        "inverse_cartan",
        [](const std::string& type, int rank) {
            std::vector<std::vector<std::string>> out;
            for (const auto& row : build_root_datum(parse_type(type), rank).inverse_cartan) {
                std::vector<std::string> r;
                for (const auto& x : row) r.push_back(x.get_str());
                out.push_back(r);
            }
            return out;
        },
        py::arg("type"), py::arg("rank"), "Exact inverse Cartan matrix, entries as 'p/q'.");

    m.def(
        "root_datum_json",
        [](const std::string& type, int rank) {
            return rootdatum_to_json(build_root_datum(parse_type(type), rank));
        },
        py::arg("type"), py::arg("rank"), "Full root datum as a JSON document.");

    m.def(
        "root_count",
        [](const std::string& type, int rank) {
            return generate_root_system(build_root_datum(parse_type(type), rank)).size();
        },
        py::arg("type"), py::arg("rank"));

    m.def(
        "fundamental_group",
        [](const std::string& type, int rank) {
            std::vector<long> out;
            for (const auto& x : fundamental_group(parse_type(type), rank))
                out.push_back(x.get_si());
            return out;
        },
        py::arg("type"), py::arg("rank"), "Abelian invariants of the weight/root quotient.");

    m.def(
        "weyl_order",
        [](const std::string& type, int rank) {
            return weyl_order(parse_type(type), rank).get_si();
        },
        py::arg("type"), py::arg("rank"));

    m.def(
        "closure_order",
        [](const std::string& set_spec, size_t cap) {
            return run_catalog_closure(set_spec, cap, false, false).order;
        },
        py::arg("set_spec"), py::arg("cap") = kDefaultClosureCap,
        "Order of a named generator set, e.g. 'B-weyl-lift:3'.");

    m.def("catalog_names", &catalog_names, "Named generator sets usable with closure_order.");

    m.def(
        "verify",
        [](const std::string& suite, const std::string& type, std::optional<int> rank) {
            std::optional<char> t;
            if (!type.empty()) t = type[0];
            auto reports = run_suites(suite, t, rank);
            bool ok = true;
            for (const auto& r : reports) ok = ok && r.all_passed();
            return py::make_tuple(ok, report_to_json(reports));
        },
        py::arg("suite"), py::arg("type") = "", py::arg("rank") = std::nullopt,
        "Run a verification suite; returns (all_passed, report_json).");

    m.def("suite_names", &suite_names);

    m.def(
        "theta_fixed_weyl_order",
        [](const std::string& type, int rank) {
            return theta_fixed_weyl_order(parse_type(type), rank);
        },
        py::arg("type"), py::arg("rank"),
        "Number of ambient Weyl permutations fixed by the involution.");

    m.def(
        "theta_fixed_dimension",
        [](const std::string& type, int rank) {
            return theta_fixed_dimension(parse_type(type), rank);
        },
        py::arg("type"), py::arg("rank"), "Dimension of the classical subalgebra.");

    m.def(
        "exp_quarter_turn",
        [](const std::string& type, int rank, int i) {
            return exp_quarter_J(parse_type(type), rank, i).str();
        },
        py::arg("type"), py::arg("rank"), py::arg("i"),
        "The quarter-turn group element exp((pi/2) J_i), printed exactly.");

    m.def(
        "so3_lift",
        [](const std::vector<std::vector<std::string>>& rows) -> std::optional<std::string> {
            if (rows.size() != 3) throw std::invalid_argument("need a 3x3 matrix");
            ExactMatrix r(3, 1);
            for (int i = 0; i < 3; ++i) {
                if (rows[i].size() != 3) throw std::invalid_argument("need a 3x3 matrix");
                for (int j = 0; j < 3; ++j)
                    r.at(i, j) = Cyclotomic::rational_at(rational_from_string(rows[i][j]), 1);
            }
            auto q = so3_lift(r);
            if (!q) return std::nullopt;
            return q->str();
        },
        py::arg("rotation"),
        "Rational unit-quaternion lift of a rational rotation matrix, if one exists.");
}
