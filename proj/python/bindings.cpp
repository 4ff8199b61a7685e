#include "bchroma/constructions.hpp"
#include "bchroma/error.hpp"
#include "bchroma/formulas.hpp"
#include "bchroma/graph_spec.hpp"
#include "bchroma/io.hpp"
#include "bchroma/operators.hpp"
#include "bchroma/serialize.hpp"
#include "bchroma/solver.hpp"
#include "bchroma/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bchroma;

namespace {

py::object to_python(const nlohmann::json& j)
{
    switch (j.type()) {
    case nlohmann::json::value_t::null:
        return py::none();
    case nlohmann::json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
        return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
        return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
        return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
        return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list out;
        for (const auto& v : j)
            out.append(to_python(v));
        return out;
    }
    case nlohmann::json::value_t::object: {
        py::dict out;
        for (const auto& [k, v] : j.items())
            out[py::str(k)] = to_python(v);
        return out;
    }
    default:
        throw std::runtime_error("unsupported JSON value");
    }
}

nlohmann::json from_python(const py::handle& obj)
{
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

Budget make_budget(std::optional<std::uint64_t> max_nodes, std::optional<double> max_seconds, unsigned workers)
{
    auto b = Budget::from_environment();
    if (max_nodes)
        b.max_nodes = *max_nodes;
    if (max_seconds)
        b.max_seconds = *max_seconds;
    b.workers = workers;
    return b;
}

py::object certificate(const Graph& g, const std::optional<BColoringCertificate>& cert)
{
    if (!cert)
        return py::none();
    return to_python(certificate_to_json(g, *cert));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "b-coloring solver, constructions and formulas";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<HypothesisError>(m, "HypothesisError", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("labels",
             [](const Graph& g) {
                 std::vector<std::string> out;
                 for (const auto& l : g.labels())
                     out.push_back(l.to_string());
                 return out;
             })
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<Vertex, Vertex>> out;
                 for (const auto& e : g.edges())
                     out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("to_json", [](const Graph& g) { return to_python(graph_to_json(g)); })
        .def("to_dot", [](const Graph& g) { return to_dot(g); })
        .def("__repr__", [](const Graph& g) {
            return "<Graph |V|=" + std::to_string(g.vertex_count()) + " |E|=" + std::to_string(g.edge_count()) +
                   ">";
        });

    m.def("parse_graph", [](const std::string& spec) { return build_graph(parse_graph_spec(spec)); },
          py::arg("spec"), "Builds a graph from an expression such as 'prod(star:3,star:2)'.");
    m.def("graph_from_json", [](const py::object& obj) { return graph_from_json(from_python(obj)); });
    m.def("star", &star);
    m.def("complete", &complete);
    m.def("path", &path);
    m.def("cycle", &cycle);
    m.def("cartesian_product", &cartesian_product);
    m.def("line_graph", &line_graph);
    m.def("total_graph", &total_graph);
    m.def("graph_power", &graph_power);
    m.def("diameter", &diameter);

    m.def("m_degree", &m_degree);
    m.def(
        "clique_number", [](const Graph& g) { return clique_number(g, Budget::from_environment()); },
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "chromatic_number", [](const Graph& g) { return chromatic_number(g, Budget::from_environment()); },
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "b_chromatic_number",
        [](const Graph& g, std::optional<std::uint64_t> max_nodes, std::optional<double> max_seconds,
           unsigned workers) {
            auto budget = make_budget(max_nodes, max_seconds, workers);
            SearchReport r;
            {
                py::gil_scoped_release release;
                r = b_chromatic_number(g, budget);
            }
            return to_python(search_report_to_json(g, r));
        },
        py::arg("graph"), py::kw_only(), py::arg("max_nodes") = py::none(), py::arg("max_seconds") = py::none(),
        py::arg("workers") = 1);

    m.def(
        "has_b_coloring",
        [](const Graph& g, Color k, std::optional<std::uint64_t> max_nodes, std::optional<double> max_seconds,
           unsigned workers) {
            auto budget = make_budget(max_nodes, max_seconds, workers);
            std::optional<BColoringCertificate> cert;
            {
                py::gil_scoped_release release;
                cert = has_b_coloring(g, k, budget);
            }
            return certificate(g, cert);
        },
        py::arg("graph"), py::arg("k"), py::kw_only(), py::arg("max_nodes") = py::none(),
        py::arg("max_seconds") = py::none(), py::arg("workers") = 1);

    m.def(
        "count_b_colorings",
        [](const Graph& g, Color k, const std::string& mode, std::optional<std::uint64_t> max_nodes,
           std::optional<double> max_seconds, unsigned workers) {
            if (mode != "exact" && mode != "within")
                throw py::value_error("mode must be 'exact' or 'within'");
            auto budget = make_budget(max_nodes, max_seconds, workers);
            CountReport r;
            {
                py::gil_scoped_release release;
                r = mode == "within" ? count_b_colorings_within_palette(g, k, budget)
                                     : count_b_colorings(g, k, budget);
            }
            return to_python(count_report_to_json(r));
        },
        py::arg("graph"), py::arg("k"), py::kw_only(), py::arg("mode") = "exact", py::arg("max_nodes") = py::none(),
        py::arg("max_seconds") = py::none(), py::arg("workers") = 1);

    m.def(
        "validate_certificate",
        [](const Graph& g, const py::object& cert) {
            auto v = validate_certificate(g, certificate_from_json(g, from_python(cert)));
            return py::make_tuple(v.valid, v.diagnostic);
        },
        py::arg("graph"), py::arg("certificate"), "Returns (valid, diagnostic).");
    m.def("certificate_to_dot", [](const Graph& g, const py::object& cert) {
        auto c = certificate_from_json(g, from_python(cert));
        return to_dot(g, &c);
    });

    m.def("star_product_graph", &star_product_graph);
    m.def("line_star_product_graph", &line_star_product_graph);
    m.def("total_star_product_graph", &total_star_product_graph);
    m.def("power_star_product_graph", &power_star_product_graph);
    m.def("color_star_product",
          [](std::size_t n, std::size_t mm) { return to_python(certificate_to_json(star_product_graph(n, mm), color_star_product(n, mm))); });
    m.def("color_line_star_product", [](std::size_t n, std::size_t mm) {
        return to_python(certificate_to_json(line_star_product_graph(n, mm), color_line_star_product(n, mm)));
    });
    m.def(
        "color_total_star_product",
        [](std::size_t n, std::size_t mm, const std::string& plan) {
            if (plan != "canonical" && plan != "appendix")
                throw py::value_error("plan must be 'canonical' or 'appendix'");
            auto cert = plan == "appendix" ? color_total_star_product(n, mm, appendix_total_plan(n, mm))
                                           : color_total_star_product(n, mm);
            return to_python(certificate_to_json(total_star_product_graph(n, mm), cert));
        },
        py::arg("n"), py::arg("m"), py::arg("plan") = "canonical");
    m.def("color_power_star_product", [](std::size_t n, std::size_t mm, std::size_t k) {
        return to_python(certificate_to_json(power_star_product_graph(n, mm, k), color_power_star_product(n, mm, k)));
    });
    m.def("rook_grid_coloring", [](std::size_t n) { return to_python(grid_to_json(rook_grid_coloring(n))); });

    m.def("phi_star_product", [](std::size_t n, std::size_t mm) { return to_python(to_json(phi_star_product(n, mm))); });
    m.def("phi_line_star_product",
          [](std::size_t n, std::size_t mm) { return to_python(to_json(phi_line_star_product(n, mm))); });
    m.def("phi_total_star_product",
          [](std::size_t n, std::size_t mm) { return to_python(to_json(phi_total_star_product(n, mm))); });
    m.def("phi_star_product_power", [](std::size_t n, std::size_t mm, std::size_t k) {
        return to_python(to_json(phi_star_product_power(n, mm, k)));
    });
    m.def("phi_rook_bounds", [](std::size_t n, std::size_t mm) { return to_python(to_json(phi_rook_bounds(n, mm))); });
    m.def("m_degree_formula", [](const std::string& family, std::size_t n, std::size_t mm) {
        return m_degree_formula(parse_family(family), n, mm);
    });
    m.def("theorem_table", [](std::size_t n_max) { return to_python(theorem_table(n_max)); }, py::arg("n_max") = 6);

    m.def(
        "verify",
        [](const std::string& suite, std::optional<std::string> n, std::optional<std::string> mm,
           std::optional<std::string> k, std::optional<double> max_seconds) {
            VerifyOptions o;
            if (n)
                o.n = Range::parse(*n);
            if (mm)
                o.m = Range::parse(*mm);
            if (k)
                o.k = Range::parse(*k);
            if (max_seconds)
                o.budget.max_seconds = *max_seconds;
            VerifyReport r;
            {
                py::gil_scoped_release release;
                r = run_verify(suite, o);
            }
            return to_python(to_json(r));
        },
        py::arg("suite"), py::kw_only(), py::arg("n") = py::none(), py::arg("m") = py::none(),
        py::arg("k") = py::none(), py::arg("max_seconds") = py::none());
    m.attr("schema_version") = schema_version;
}
