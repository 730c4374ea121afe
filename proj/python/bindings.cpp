#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gct/chartab.hpp"
#include "gct/corpus.hpp"
#include "gct/report.hpp"

namespace py = pybind11;

namespace {

using namespace gct;

SubgroupSet resolve(const Fixture& fx, int k) {
    std::vector<SubgroupSet> ns = indexed_normals(fx.group);
    if (k < 1 || k > static_cast<int>(ns.size()))
        throw std::out_of_range("normal index " + std::to_string(k) + " is out of range (1.." +
                                std::to_string(ns.size()) + ")");
    return ns[static_cast<size_t>(k - 1)];
}

ReportOptions json_opts(unsigned long seed = 0) {
    ReportOptions o;
    o.json = true;
    o.seed = seed;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact character tables of normal subgroups";

    py::register_exception<Error>(m, "ToolkitError");
    py::register_exception<VerificationFailed>(m, "VerificationError");
    py::register_exception<SyntaxError>(m, "FixtureSyntaxError");

    py::class_<Fixture>(m, "Fixture")
        .def_property_readonly("name", [](const Fixture& f) { return f.name; })
        .def_property_readonly("order", [](const Fixture& f) { return f.group->order(); })
        .def_property_readonly("meta", [](const Fixture& f) { return f.meta; })
        .def("__repr__", [](const Fixture& f) {
            return "<Fixture " + f.name + " order " + std::to_string(f.group->order()) + ">";
        });

    m.def(
        "load_fixture",
        [](const std::string& path, long cap) { return load_fixture(path, cap); },
        py::arg("path"), py::arg("max_order") = 5000);
    m.def(
        "parse_fixture",
        [](const std::string& text, long cap) { return parse_fixture(text, cap); },
        py::arg("text"), py::arg("max_order") = 5000);
    m.def("corpus_fixture", [](const std::string& name) {
        Fixture fx;
        fx.name = name;
        fx.group = corpus_group(name);
        return fx;
    });
    m.def("corpus_names", [] {
        std::vector<std::string> v;
        for (const CorpusEntry& e : corpus()) v.push_back(e.name);
        return v;
    });

    m.def("table_json", [](const Fixture& fx) {
        return report_table(fx, character_table(fx.group), json_opts());
    });
    m.def("normals_json", [](const Fixture& fx) { return report_normals(fx, json_opts()); });
    m.def("gtable_json", [](const Fixture& fx, int k) {
        SubgroupSet N = resolve(fx, k);
        return report_gtable(fx, character_table(fx.group), k, N, json_opts());
    });
    m.def("series_json", [](const Fixture& fx, int k) {
        SubgroupSet N = resolve(fx, k);
        return report_series(fx, character_table(fx.group), k, N, true, true, json_opts());
    });
    m.def(
        "check_json",
        [](const Fixture& fx, const std::string& which, int k, long p) {
            SubgroupSet N;
            const SubgroupSet* Np = nullptr;
            if (which != "nmi") {
                N = resolve(fx, k);
                Np = &N;
            }
            return report_check(which, fx, character_table(fx.group), k, Np, p, json_opts()).text;
        },
        py::arg("fixture"), py::arg("which"), py::arg("normal") = 0, py::arg("p") = 0);
    m.def(
        "verify_json",
        [](const Fixture& fx, unsigned long seed) { return report_verify(fx, json_opts(seed)); },
        py::arg("fixture"), py::arg("seed") = 0);

    m.def("normalize_cyclo", [](const std::string& s) { return render_cyclo(parse_cyclo(s)); });
}
