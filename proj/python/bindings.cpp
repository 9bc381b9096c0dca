#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "spets/heckeschur.hpp"

namespace py = pybind11;
using namespace spets;

namespace {

std::vector<std::string> strings(const ClassFunction& f) {
    std::vector<std::string> out;
    for (const auto& x : f) out.push_back(x.str());
    return out;
}

std::shared_ptr<const Group> make_group(const std::string& spec, long long cap) {
    return std::make_shared<const Group>(GroupSpec::parse(spec), cap);
}

py::dict character_table(const std::string& spec, long long cap) {
    auto g = make_group(spec, cap);
    CharTable t(g);
    py::dict d;
    std::vector<std::string> classes, labels;
    std::vector<int> sizes;
    for (int c = 0; c < g->class_count(); ++c) {
        classes.push_back(g->class_name(c));
        sizes.push_back(g->classes()[c].size());
    }
    std::vector<std::vector<std::string>> values;
    for (int i = 0; i < t.size(); ++i) {
        labels.push_back(t.label(i));
        values.push_back(strings(t.irr(i)));
    }
    d["group"] = g->spec().str();
    d["classes"] = classes;
    d["class_sizes"] = sizes;
    d["labels"] = labels;
    d["values"] = values;
    return d;
}

py::list coxeter_numbers(const std::string& spec, long long cap) {
    CharTable t(make_group(spec, cap));
    py::list out;
    for (int i = 0; i < t.size(); ++i) {
        py::dict row;
        row["character"] = t.label(i);
        row["degree"] = t.degree(i).str();
        row["N"] = t.n_of(i).str();
        row["N_conj"] = t.n_of(t.conj_index(i)).str();
        row["c"] = t.coxeter_number(i).str();
        out.append(row);
    }
    return out;
}

py::dict hook_degree(int e, int n, int k, bool full) {
    HookIndex h{e, n, k, full};
    QLaurent d = degree_hook(h);
    py::dict out;
    out["deg"] = d.str();
    out["schur"] = schur_hook(h).str();
    out["a"] = d.valuation();
    out["A"] = d.degree();
    out["h"] = h.coxeter_number();
    out["at_zeta_h"] = d.eval(E(h.coxeter_number())).str();
    out["at_one"] = d.eval(CycNumber(1)).str();
    return out;
}

/// Runs a CLI command; returns (exit code, report JSON text).
std::pair<int, std::string> run(const std::string& command, const std::string& group, const std::string& check,
                                const std::string& towers, long long cap, const std::string& cache_dir,
                                const std::string& fourier_data) {
    app::RunConfig cfg;
    cfg.command = command;
    cfg.group = group;
    cfg.check = check;
    cfg.towers = towers;
    cfg.cap = cap;
    cfg.cache_dir = cache_dir;
    cfg.fourier_data = fourier_data;
    app::Report r = app::run_command(cfg);
    return {r.exit_code(), r.stable_json().dump()};
}

}  // namespace

PYBIND11_MODULE(_spets, m) {
    m.doc() = "Exact computations for the reflection groups G(e,1,n) and G(e,e,n)";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<CycNumber>(m, "CycNumber")
        .def(py::init<>())
        .def(py::init<long>())
        .def_static("parse", &CycNumber::parse)
        .def_static("root_of_unity", &CycNumber::root_of_unity, py::arg("n"), py::arg("k") = 1)
        .def_property_readonly("conductor", &CycNumber::conductor)
        .def("conj", &CycNumber::conj)
        .def("galois", &CycNumber::galois)
        .def("inverse", &CycNumber::inverse)
        .def("is_zero", &CycNumber::is_zero)
        .def("is_rational", &CycNumber::is_rational)
        .def("__complex__", &CycNumber::to_complex)
        .def("__str__", &CycNumber::str)
        .def("__repr__", [](const CycNumber& x) { return "CycNumber('" + x.str() + "')"; })
        .def("__hash__", &CycNumber::hash)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self);

    m.def("group_order", [](const std::string& spec) { return GroupSpec::parse(spec).order(); });
    m.def("character_table", &character_table, py::arg("group"), py::arg("cap") = kDefaultOrderCap);
    m.def("coxeter_numbers", &coxeter_numbers, py::arg("group"), py::arg("cap") = kDefaultOrderCap);
    m.def("hook_degree", &hook_degree, py::arg("e"), py::arg("n"), py::arg("k"), py::arg("full") = true);
    m.def("run", &run, py::arg("command"), py::arg("group"), py::arg("check") = "", py::arg("towers") = "conj",
          py::arg("cap") = kDefaultOrderCap, py::arg("cache_dir") = "", py::arg("fourier_data") = "");
}
