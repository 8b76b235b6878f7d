#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "laxepi/corpus.hpp"
#include "laxepi/report.hpp"

namespace py = pybind11;
using namespace laxepi;

namespace {

// Instance JSON text, or "builtin:<name>".
Instance load(const std::string& source) {
    const std::string prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) return builtin(source.substr(prefix.size()));
    return parse_instance(source);
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact deciders for epimorphisms of finite linear categories; reports are JSON strings.";

    static py::exception<Error> error(m, "LaxepiError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetObject(error.ptr(), py::make_tuple(code_name(e.code()), e.what()).ptr());
        }
    });

    m.def("builtin_names", &builtin_names);
    m.def("builtin", [](const std::string& name) { return serialize_instance(builtin(name)); });
    m.def("random_instance", [](std::uint64_t seed) { return serialize_instance(random_instance(seed)); });
    m.def("instance_hash", [](const std::string& src) { return instance_hash(load(src)); });
    m.def("check_kinds", &check_kinds);

    m.def("validate", [](const std::string& src) { return dump(validate_report(load(src))); });
    m.def(
        "factor",
        [](const std::string& src, const std::string& functor, std::optional<std::string> ideal) {
            return dump(factor_report(load(src), functor, ideal));
        },
        py::arg("instance"), py::arg("functor"), py::arg("ideal") = py::none());
    m.def(
        "check",
        [](const std::string& src, const std::string& subject, const std::string& kind, std::optional<std::string> ideal) {
            Instance inst = load(src);
            py::gil_scoped_release release;
            return dump(check_report(inst, subject, kind, ideal));
        },
        py::arg("instance"), py::arg("subject"), py::arg("kind"), py::arg("ideal") = py::none());
    m.def(
        "localize",
        [](const std::string& src, const std::string& module, const std::string& ideal) {
            return dump(localize_report(load(src), module, ideal));
        },
        py::arg("instance"), py::arg("module"), py::arg("ideal"));
    m.def(
        "hom",
        [](const std::string& src, const std::string& from, const std::string& to, std::optional<std::string> ideal) {
            return dump(hom_report(load(src), from, to, ideal));
        },
        py::arg("instance"), py::arg("source"), py::arg("target"), py::arg("ideal") = py::none());
    m.def(
        "corpus_run",
        [](std::uint64_t seed, std::size_t count) {
            py::gil_scoped_release release;
            return dump(corpus_run(seed, count).report);
        },
        py::arg("seed") = 0, py::arg("count") = 50);
}
