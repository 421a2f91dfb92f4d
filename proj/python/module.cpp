/* Python bindings: the kernel's main operations with text in, text out.
 * Expressions and maps travel as canonical strings; reports travel as
 * json-like strings the package wrapper parses into dicts. */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "cremona/frontend.hpp"
#include "cremona/report.hpp"

namespace py = pybind11;
using namespace cremona;

namespace {

RingPtr ring_of(const std::vector<std::string>& vars, long p) {
    Field F = (p == 0) ? Field::rationals() : Field::prime(p);
    return make_ring(F, vars);
}

std::vector<std::pair<std::string, std::string>> images_of(const CremonaMap& m) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < m.ring()->arity(); ++i)
        out.emplace_back(m.ring()->vars[i], to_string(m.image(i)));
    return out;
}

std::string resolve_dir(const std::string& dir) {
    return dir.empty() ? default_scenario_dir() : dir;
}

} // namespace

PYBIND11_MODULE(_cremona, m) {
    m.doc() = "exact verification kernel for a Cremona involution's fixed field";

    // most-derived exceptions must be registered last: translators run in
    // reverse registration order
    py::register_exception<error>(m, "KernelError", PyExc_RuntimeError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<schema_error>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<division_by_zero>(m, "DivisionByZero",
                                             PyExc_ZeroDivisionError);

    m.def(
        "canonical",
        [](const std::string& text, const std::vector<std::string>& vars, long p) {
            return to_string(parse_expression(text, ring_of(vars, p)));
        },
        py::arg("text"), py::arg("vars"), py::arg("p") = 0,
        "parse an expression in the given variables (characteristic p, 0 for "
        "the rationals) and return its canonical rendering");

    m.def(
        "map_images",
        [](const std::string& path) {
            Scenario sc = load_single_map_file(path);
            return images_of(only_map(sc));
        },
        py::arg("path"),
        "(variable, image) pairs of the single map in a scenario-format file");

    m.def(
        "apply_map",
        [](const std::string& path, const std::string& expr) {
            Scenario sc = load_single_map_file(path);
            const CremonaMap& map = only_map(sc);
            RationalFunction e = parse_expression(
                expr, map.ring(), scenario_resolver(sc, map.ring()));
            return to_string(map.pullback(e));
        },
        py::arg("path"), py::arg("expr"),
        "pull an expression back along the single map in a map file; names "
        "defined in the file are usable in the expression");

    m.def(
        "compose_maps",
        [](const std::string& first, const std::string& second) {
            Scenario a = load_single_map_file(first);
            Scenario b = load_single_map_file(second);
            return images_of(compose(only_map(a), only_map(b)));
        },
        py::arg("first"), py::arg("second"),
        "images of the composition: the first map applied after the second");

    m.def(
        "involution_check",
        [](const std::string& path) {
            return verify_involution(only_map(load_single_map_file(path)));
        },
        py::arg("path"),
        "True exactly when the map squares to the identity without being "
        "the identity");

    m.def(
        "reduce_map",
        [](const std::string& path, long p) {
            Scenario sc = load_single_map_file(path);
            return images_of(reduce_map_mod_p(only_map(sc), p));
        },
        py::arg("path"), py::arg("p"),
        "images of the map reduced coefficient-wise into characteristic p");

    m.def(
        "resultant",
        [](const std::string& var, const std::string& a, const std::string& b) {
            return to_string(resultant_from_texts(var, a, b));
        },
        py::arg("var"), py::arg("a"), py::arg("b"),
        "resultant of two polynomials over the rationals in the named "
        "variable; the ambient variables are inferred from the texts");

    m.def(
        "run_section",
        [](const std::string& section, const std::string& dir) {
            return to_json_like(run_section(resolve_dir(dir), section));
        },
        py::arg("section"), py::arg("dir") = "",
        "run one scenario section; returns the report as a json-like string");

    m.def(
        "run_all",
        [](std::uint64_t seed, const std::string& dir) {
            return to_json_like(run_all(resolve_dir(dir), seed));
        },
        py::arg("seed") = 1, py::arg("dir") = "",
        "run every section, the errata determinations, and the property "
        "suites; returns the full report as a json-like string");

    m.def(
        "detect_errata",
        [](const std::string& dir) {
            return to_json_like(detect_errata(resolve_dir(dir)));
        },
        py::arg("dir") = "",
        "determine which variants of inconsistently displayed formulas are "
        "internally consistent; returns the report as a json-like string");

    m.def("default_scenario_dir", &default_scenario_dir,
          "directory scenario files are read from");

    m.def(
        "sections", [] { return scenario_sections(); },
        "the section names a full run verifies, in order");

    m.def(
        "required_display_tags", [] { return required_display_tags(); },
        "display tags a full run requires the scenario steps to cover");
}
