#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "topograph/dual.hpp"
#include "topograph/graph.hpp"
#include "topograph/groupoid.hpp"
#include "topograph/ktheory.hpp"
#include "topograph/paths.hpp"
#include "topograph/textio.hpp"
#include "topograph/unital.hpp"
#include "topograph/verify.hpp"

namespace py = pybind11;
namespace tg = topograph;

namespace {

std::optional<std::set<tg::VertexId>> to_subset(const py::object& u) {
    if (u.is_none()) return std::nullopt;
    std::set<tg::VertexId> out;
    for (const auto& v : u) out.insert(py::cast<std::string>(v));
    return out;
}

py::object big_to_int(const tg::BigInt& x) {
    return py::module_::import("builtins").attr("int")(x.str());
}

tg::Mat mat_from_py(const std::vector<std::vector<py::object>>& rows) {
    tg::Mat out;
    for (const auto& row : rows) {
        out.emplace_back();
        for (const auto& x : row)
            out.back().push_back(tg::BigInt::from_string(py::cast<std::string>(py::str(x))));
    }
    return out;
}

py::list mat_to_py(const tg::Mat& m) {
    py::list out;
    for (const auto& row : m) {
        py::list r;
        for (const auto& x : row) r.append(big_to_int(x));
        out.append(r);
    }
    return out;
}

py::dict factor_map_dict(const tg::FactorMap& m) {
    py::dict out;
    out["vertex_map"] = m.vertex_map;
    out["edge_map"] = m.edge_map;
    return out;
}

py::dict report_dict(const tg::InfinityReport& r) {
    py::dict out;
    out["undefined_edges"] = r.undefined_edges.str();
    out["escaping"] = r.escaping.str();
    out["never_received"] = r.never_received.str();
    out["verdict"] = tg::verdict_name(r.verdict);
    out["unital"] = r.unital;
    out["reasons"] = r.reasons;
    return out;
}

py::dict group_dict(const tg::AbelianGroup& a) {
    py::dict out;
    out["free_rank"] = a.free_rank;
    py::list t;
    for (const auto& d : a.torsion) t.append(big_to_int(d));
    out["torsion"] = t;
    out["repr"] = a.str();
    return out;
}

}  // namespace

PYBIND11_MODULE(topograph, m) {
    m.doc() = "dual graphs, boundary path spaces, shift groupoids and K-theory "
              "of finitely presented topological graphs";

    py::register_exception<tg::ParseError>(m, "GraphParseError", PyExc_ValueError);

    py::class_<tg::Graph>(m, "Graph")
        .def(py::init([](const std::string& text) { return tg::parse_graph(text); }),
             py::arg("text"))
        .def_property_readonly("vertices", [](const tg::Graph& g) { return g.vertices; })
        .def_property_readonly("edges",
                               [](const tg::Graph& g) {
                                   py::list out;
                                   for (const auto& e : g.groups) {
                                       py::dict d;
                                       d["id"] = e.id;
                                       d["dom"] = e.dom;
                                       d["range"] = e.range ? py::object(py::str(*e.range))
                                                            : py::object(py::none());
                                       d["omega"] = e.multiplicity.is_omega();
                                       out.append(d);
                                   }
                                   return out;
                               })
        .def_property_readonly("relative",
                               [](const tg::Graph& g) -> py::object {
                                   if (!g.relative) return py::none();
                                   return py::cast(*g.relative);
                               })
        .def_property_readonly("escape_omega",
                               [](const tg::Graph& g) { return g.escape == tg::Escape::Omega; })
        .def("text", [](const tg::Graph& g) { return tg::print_graph(g); })
        .def("__eq__", [](const tg::Graph& a, const tg::Graph& b) {
            return tg::canonicalized(a) == tg::canonicalized(b);
        })
        .def("__repr__", [](const tg::Graph& g) {
            return "Graph(" + std::to_string(g.vertices.size()) + " vertices, " +
                   std::to_string(g.groups.size()) + " edges)";
        });

    m.def("parse_graph", &tg::parse_graph, py::arg("text"));
    m.def("print_graph", &tg::print_graph, py::arg("g"));
    m.def("validate", &tg::validate, py::arg("g"));
    m.def(
        "classify",
        [](const tg::Graph& g) {
            auto cls = tg::classify(g);
            py::dict out;
            for (const auto& [v, c] : cls.cls) {
                py::dict d;
                d["class"] = tg::vertex_class_name(c);
                d["receives"] = cls.receiver.at(v).str();
                out[py::str(v)] = d;
            }
            return out;
        },
        py::arg("g"));
    m.def("is_sgds", &tg::is_sgds, py::arg("g"));
    m.def(
        "tilde_completion",
        [](const tg::Graph& g) {
            auto c = tg::tilde_completion(g);
            return py::make_tuple(c.graph, c.infinity_vertex);
        },
        py::arg("g"));
    m.def(
        "restrict",
        [](const tg::Graph& f, const py::object& e0) {
            return tg::restrict_to(f, *to_subset(e0));
        },
        py::arg("f"), py::arg("vertices"));

    m.def(
        "dual",
        [](const tg::Graph& g) {
            auto d = tg::dual(g);
            return py::make_tuple(d.graph, factor_map_dict(d.to_base));
        },
        py::arg("g"));
    m.def(
        "relative_dual",
        [](const tg::Graph& g, const py::object& u) {
            auto d = tg::relative_dual(g, *to_subset(u));
            return py::make_tuple(d.graph, factor_map_dict(d.to_base));
        },
        py::arg("g"), py::arg("u"));
    m.def(
        "iterate",
        [](const tg::Graph& g, int k) {
            auto it = tg::iterate(g, k);
            return py::make_tuple(it.stages.back(), factor_map_dict(it.to_base));
        },
        py::arg("g"), py::arg("k"));
    m.def(
        "iterate_product",
        [](const tg::Graph& g, int k) {
            auto it = tg::iterate_product(g, k);
            return py::make_tuple(it.graph, factor_map_dict(it.to_base));
        },
        py::arg("g"), py::arg("k"));
    m.def(
        "check_factor_map",
        [](const py::dict& fm, const tg::Graph& source, const tg::Graph& target) {
            tg::FactorMap m;
            m.vertex_map = py::cast<std::map<std::string, std::string>>(fm["vertex_map"]);
            m.edge_map = py::cast<std::map<std::string, std::string>>(fm["edge_map"]);
            return tg::check_factor_map(m, source, target);
        },
        py::arg("factor_map"), py::arg("source"), py::arg("target"));
    m.def(
        "isomorphic",
        [](const tg::Graph& a, const tg::Graph& b) -> py::object {
            auto iso = tg::isomorphic(a, b);
            if (!iso) return py::none();
            py::dict out;
            out["vertex_map"] = iso->vertex_map;
            out["edge_map"] = iso->edge_map;
            return out;
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "paths",
        [](const tg::Graph& g, int n) {
            std::vector<std::string> out;
            for (const auto& p : tg::enumerate_paths(g, n)) out.push_back(tg::to_string(p));
            return out;
        },
        py::arg("g"), py::arg("n"));
    m.def(
        "boundary",
        [](const tg::Graph& g, int max_len, int max_cycle) {
            std::vector<std::string> out;
            for (const auto& x : tg::boundary_finite(g, max_len)) out.push_back(tg::to_string(x));
            for (const auto& x : tg::lassos(g, max_len, max_cycle))
                out.push_back(tg::to_string(x));
            return out;
        },
        py::arg("g"), py::arg("max_len") = 3, py::arg("max_cycle") = 3);
    m.def(
        "shift",
        [](const tg::Graph& g, const std::string& literal) {
            return tg::to_string(tg::shift(tg::parse_boundary_path(g, literal)));
        },
        py::arg("g"), py::arg("path"));
    m.def(
        "truncate",
        [](const tg::Graph& g, const std::string& literal, int k) {
            return tg::truncate(g, tg::parse_boundary_path(g, literal), k);
        },
        py::arg("g"), py::arg("path"), py::arg("k"));

    m.def(
        "tail_equivalent",
        [](const tg::Graph& g, const std::string& x, const std::string& y) -> py::object {
            auto te = tg::tail_equivalent(tg::parse_boundary_path(g, x),
                                          tg::parse_boundary_path(g, y));
            if (!te) return py::none();
            return py::make_tuple(te->m, te->n);
        },
        py::arg("g"), py::arg("x"), py::arg("y"));
    m.def(
        "element",
        [](const tg::Graph& g, const std::string& x, long long k, const std::string& y) {
            auto e = tg::element(tg::parse_boundary_path(g, x), k, tg::parse_boundary_path(g, y));
            py::dict out;
            out["x"] = tg::to_string(e.x);
            out["k"] = e.k;
            out["y"] = tg::to_string(e.y);
            out["m"] = e.m;
            out["n"] = e.n;
            return out;
        },
        py::arg("g"), py::arg("x"), py::arg("k"), py::arg("y"));
    m.def(
        "isotropy",
        [](const tg::Graph& g, const std::string& x) {
            return tg::isotropy(tg::parse_boundary_path(g, x)).period;
        },
        py::arg("g"), py::arg("x"));
    m.def(
        "orbit",
        [](const tg::Graph& g, const std::string& x, int bound) {
            std::vector<std::string> out;
            for (const auto& y : tg::orbit(g, tg::parse_boundary_path(g, x), bound))
                out.push_back(tg::to_string(y));
            return out;
        },
        py::arg("g"), py::arg("x"), py::arg("bound") = 3);

    m.def(
        "build_map",
        [](const tg::Graph& g, const py::object& u) {
            auto m_ = tg::build_map(g, to_subset(u));
            py::dict out;
            out["rows"] = m_.row_ids;
            out["cols"] = m_.col_ids;
            out["matrix"] = mat_to_py(m_.a);
            return out;
        },
        py::arg("g"), py::arg("u") = py::none());
    m.def(
        "smith_normal_form",
        [](const std::vector<std::vector<py::object>>& rows) {
            auto snf = tg::smith_normal_form(mat_from_py(rows));
            py::dict out;
            out["P"] = mat_to_py(snf.p);
            out["D"] = mat_to_py(snf.d);
            out["Q"] = mat_to_py(snf.q);
            py::list f;
            for (const auto& d : snf.invariant_factors) f.append(big_to_int(d));
            out["invariant_factors"] = f;
            out["rank"] = snf.rank;
            return out;
        },
        py::arg("matrix"));
    m.def(
        "k_groups",
        [](const tg::Graph& g, const py::object& u) {
            auto kg = tg::k_groups(g, to_subset(u));
            py::dict out;
            out["K0"] = group_dict(kg.k0);
            out["K1"] = group_dict(kg.k1);
            out["repr"] = "K0 = " + kg.k0.str() + ", K1 = " + kg.k1.str();
            return out;
        },
        py::arg("g"), py::arg("u") = py::none());

    m.def(
        "classify_infinity",
        [](const tg::Graph& g) { return report_dict(tg::classify_infinity(g)); },
        py::arg("g"));
    m.def(
        "is_unital",
        [](const tg::Graph& g) {
            auto [u, r] = tg::is_unital(g);
            return py::make_tuple(u, report_dict(r));
        },
        py::arg("g"));
    m.def("check_y_compactness", &tg::check_y_compactness, py::arg("g"));

    m.def(
        "random_graph",
        [](std::uint64_t seed, std::uint64_t index, int max_vertices, int max_edges,
           bool allow_partial, bool allow_omega, bool allow_relative) {
            tg::GenConfig cfg{seed, max_vertices, max_edges, allow_partial, allow_omega,
                              allow_relative};
            return tg::random_graph(cfg, index);
        },
        py::arg("seed"), py::arg("index") = 0, py::arg("max_vertices") = 6,
        py::arg("max_edges") = 10, py::arg("allow_partial") = false,
        py::arg("allow_omega") = false, py::arg("allow_relative") = false);
    m.def(
        "run_suite",
        [](std::uint64_t seed, std::uint64_t cases, bool allow_partial, bool allow_omega) {
            tg::GenConfig cfg;
            cfg.seed = seed;
            cfg.allow_partial = allow_partial;
            cfg.allow_omega = allow_omega;
            cfg.allow_relative = true;
            auto rep = tg::run_suite(cfg, cases);
            return py::make_tuple(rep.all_passed(), rep.render());
        },
        py::arg("seed"), py::arg("cases") = 50, py::arg("allow_partial") = false,
        py::arg("allow_omega") = false);

    m.attr("__version__") = "0.1.0";
}
