#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "redhom/catalog.hpp"
#include "redhom/cli.hpp"
#include "redhom/error.hpp"
#include "redhom/io.hpp"
#include "redhom/reducing.hpp"
#include "redhom/torsionfree.hpp"

namespace py = pybind11;
using namespace redhom;

namespace {

// A catalog id, or a ring document as JSON text (starts with '{').
AlgebraPtr load_algebra(const std::string& ring, std::uint32_t p) {
    const std::optional<std::uint32_t> over = p ? std::optional<std::uint32_t>(p) : std::nullopt;
    if (!ring.empty() && ring.front() == '{') {
        RingSpec s = ring_spec_from_json(Json::parse(ring));
        if (over) s.p = *over;
        return Algebra::build(s);
    }
    return Algebra::build(catalog_ring(ring, over));
}

ReduceMode parse_mode(const std::string& s) {
    if (s == "red") return ReduceMode::Red;
    if (s == "ured") return ReduceMode::Ured;
    throw InputError("mode must be red or ured, got " + s);
}

ReduceTarget parse_target(const std::string& s) {
    if (s == "pd") return ReduceTarget::Pd;
    if (s == "gdim") return ReduceTarget::Gdim;
    throw InputError("target must be pd or gdim, got " + s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite-dimensional algebras over GF(p): resolutions, Ext, torsionfree classes, reducing dimensions";
    m.attr("__version__") = kVersion;

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli_run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one CLI command; returns (exit_code, report_json, summary).");

    m.def(
        "catalog",
        [](std::uint32_t p) {
            Json rings = Json::array();
            for (const auto& e : catalog_entries(p)) rings.push_back(Json{{"id", e.id}, {"description", e.description}});
            return rings.dump();
        },
        py::arg("p") = 5);

    m.def(
        "ring_info",
        [](const std::string& ring, std::uint32_t p) {
            auto a = load_algebra(ring, p);
            return Json{{"dim", a->dim()}, {"p", a->p()}}.dump();
        },
        py::arg("ring"), py::arg("p") = 0);

    m.def(
        "module",
        [](const std::string& ring, const std::string& spec, std::uint32_t p) {
            return module_to_json(parse_module(load_algebra(ring, p), spec)).dump();
        },
        py::arg("ring"), py::arg("module"), py::arg("p") = 0);

    m.def(
        "betti",
        [](const std::string& ring, const std::string& spec, std::size_t bound, std::uint32_t p) {
            py::gil_scoped_release release;
            return betti_numbers(parse_module(load_algebra(ring, p), spec), bound);
        },
        py::arg("ring"), py::arg("module"), py::arg("bound"), py::arg("p") = 0);

    m.def(
        "bass",
        [](const std::string& ring, std::size_t bound, std::uint32_t p) {
            py::gil_scoped_release release;
            return bass_numbers(free_module(load_algebra(ring, p), 1), bound);
        },
        py::arg("ring"), py::arg("bound"), py::arg("p") = 0);

    m.def(
        "ext",
        [](const std::string& ring, const std::string& spec, const std::string& target, std::size_t bound,
           std::uint32_t p) {
            py::gil_scoped_release release;
            auto a = load_algebra(ring, p);
            const Module n = target == "lambda" ? free_module(a, 1) : parse_module(a, target);
            return ext_dims(parse_module(a, spec), n, bound).dims;
        },
        py::arg("ring"), py::arg("module"), py::arg("target") = "lambda", py::arg("bound") = 4, py::arg("p") = 0);

    m.def(
        "classify",
        [](const std::string& ring, const std::string& spec, std::size_t bound, std::uint32_t p) {
            py::gil_scoped_release release;
            const Module mod = parse_module(load_algebra(ring, p), spec);
            return Json{{"torsionfree", to_json(torsionfree_classify(mod, bound))},
                        {"gdim", to_json(gdim_report(mod, bound))}}
                .dump();
        },
        py::arg("ring"), py::arg("module"), py::arg("bound") = 4, py::arg("p") = 0);

    m.def(
        "reduce",
        [](const std::string& ring, const std::string& spec, const std::string& mode, const std::string& target,
           std::size_t max_steps, std::size_t n_max, std::size_t ab_max, std::size_t tr_bound, std::uint64_t seed,
           bool dimension_filter, std::uint32_t p) {
            py::gil_scoped_release release;
            SearchLimits l;
            l.max_steps = max_steps;
            l.n_max = n_max;
            l.ab_max = ab_max;
            l.tr_bound = tr_bound;
            l.seed = seed;
            l.dimension_filter = dimension_filter;
            const SearchResult r =
                search_reducing(parse_module(load_algebra(ring, p), spec), parse_mode(mode), parse_target(target), l);
            if (r.witness) verify_witness(*r.witness);
            return to_json(r, l).dump();
        },
        py::arg("ring"), py::arg("module"), py::arg("mode") = "red", py::arg("target") = "pd", py::arg("max_steps") = 2,
        py::arg("n_max") = 1, py::arg("ab_max") = 2, py::arg("tr_bound") = 4, py::arg("seed") = 0,
        py::arg("dimension_filter") = true, py::arg("p") = 0);

    m.def(
        "growth",
        [](const std::vector<std::size_t>& values, const std::string& kind) {
            GrowthKind k = GrowthKind::Betti;
            if (kind == "bass") k = GrowthKind::Bass;
            else if (kind == "ext") k = GrowthKind::ExtLengths;
            else if (kind != "betti") throw InputError("kind must be betti, bass or ext");
            return to_json(growth_estimate(values, k)).dump();
        },
        py::arg("values"), py::arg("kind") = "betti");
}
