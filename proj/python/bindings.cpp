// SPDX-License-Identifier: Apache-2.0
#include "exfeec/verify.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace exfeec;

namespace {
IncreasingMap labels(const std::vector<int>& v) { return IncreasingMap(0, v); }
std::vector<int> labels_of(const IncreasingMap& m) { return m.values(); }
Rational rat(const std::string& s) { return Rational::parse(s); }

// JSON crosses the boundary as text; the package decodes it.
std::string dumped(const json& j) { return j.dump(); }
}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact polynomial differential forms on a simplex";

    py::register_exception<NotTraceFree>(m, "NotTraceFree", PyExc_ValueError);
    py::register_exception<GeneratorParseError>(m, "GeneratorParseError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<PolyForm>(m, "PolyForm")
        .def_static("constant", [](const std::vector<int>& host, const std::string& c) { return PolyForm::constant(labels(host), rat(c)); })
        .def_static("lam", [](const std::vector<int>& host, int i) { return PolyForm::lambda(labels(host), i); },
                    py::arg("host"), py::arg("i"), "barycentric coordinate at local index i")
        .def_static("dlam", [](const std::vector<int>& host, std::vector<int> rho) { return PolyForm::dlambda(labels(host), labels(rho)); },
                    py::arg("host"), py::arg("rho"), "(dλ)_ρ for local ρ")
        .def_static("whitney", [](const std::vector<int>& host, std::vector<int> rho) { return whitney(labels(host), labels(rho)); })
        .def_static("from_json", [](const std::string& text) { return polyform_from_json(json::parse(text)); })
        .def_property_readonly("host", [](const PolyForm& w) { return labels_of(w.host()); })
        .def_property_readonly("k", &PolyForm::k)
        .def("is_zero", &PolyForm::is_zero)
        .def("to_json", [](const PolyForm& w) { return dumped(to_json(w)); })
        .def("__str__", &PolyForm::str)
        .def("__repr__", [](const PolyForm& w) { return "PolyForm(" + w.str() + ")"; })
        .def("__add__", [](const PolyForm& a, const PolyForm& b) { return a + b; })
        .def("__sub__", [](const PolyForm& a, const PolyForm& b) { return a - b; })
        .def("__mul__", [](const PolyForm& a, const std::string& c) { return rat(c) * a; })
        .def("__rmul__", [](const PolyForm& a, const std::string& c) { return rat(c) * a; })
        .def("__xor__", [](const PolyForm& a, const PolyForm& b) { return wedge(a, b); })
        .def("__eq__", [](const PolyForm& a, const PolyForm& b) { return a == b; });

    m.def("wedge", [](const PolyForm& a, const PolyForm& b) { return wedge(a, b); });
    m.def("d", [](const PolyForm& w) { return d(w); });
    m.def("trace", [](const PolyForm& w, const std::vector<int>& face) { return trace(w, labels(face)); });
    m.def("integrate", [](const PolyForm& w) { return integrate(w).str(); });
    m.def("ring_star", &ring_star);
    m.def("is_trace_free", &is_trace_free);
    m.def("dot_extend", [](const std::vector<int>& xi, const PolyForm& w) { return dot_extend(labels(xi), w); });
    m.def("bubble_decompose", [](const PolyForm& w) {
        std::vector<std::pair<std::vector<int>, PolyForm>> out;
        for (const auto& [sigma, comp] : bubble_decompose(w).components) out.emplace_back(sigma.values(), comp);
        return out;
    });

    m.def("space_basis", [](const std::string& family, const std::vector<int>& host, int r, int k, bool trace_free) {
        Span S = space(parse_family(family), labels(host), r, k);
        return trace_free ? trace_free_subspace(S).basis() : S.basis();
    }, py::arg("family"), py::arg("host"), py::arg("r"), py::arg("k"), py::arg("trace_free") = false);
    m.def("contains", [](const std::string& family, const PolyForm& w, int r) {
        return space(parse_family(family), w.host(), r, w.k()).contains(w);
    });

    m.def("_basis_table", [](int n, int k, int r, const std::string& f) { return dumped(basis_table(n, k, r, parse_family(f))); });
    m.def("_gram_table", [](int n, int k, int r, const std::string& f) { return dumped(gram_table(n, k, r, parse_family(f))); });
    m.def("_counterexample", [] { return dumped(counterexample_report()); });
    m.def("_two_cell", [](int n, int k, int r, const std::string& f) {
        auto R = two_cell_continuity(two_cell_mesh(n), k, r, parse_family(f));
        json j = to_json(R);
        j["ok"] = R.ok();
        return dumped(j);
    });
    m.def("_verify", [](const std::string& config) {
        std::vector<std::string> lines;
        run_suite(parse_config(json::parse(config)), [&](const VerificationReport& rep) { lines.push_back(dumped(to_json(rep))); });
        return lines;
    });
    m.def("statements", [] {
        std::vector<std::string> names;
        for (const auto& s : registry()) names.push_back(s.name);
        return names;
    });
    m.def("unicode_text", &unicode_text);
}
