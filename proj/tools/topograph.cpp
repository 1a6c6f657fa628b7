// topograph: operations on finitely presented topological graphs.
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "topograph/dual.hpp"
#include "topograph/graph.hpp"
#include "topograph/groupoid.hpp"
#include "topograph/ktheory.hpp"
#include "topograph/paths.hpp"
#include "topograph/textio.hpp"
#include "topograph/unital.hpp"
#include "topograph/verify.hpp"

namespace tg = topograph;
using nlohmann::json;

namespace {

std::string slurp(std::istream& is) {
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

tg::Graph load_graph(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        text = slurp(std::cin);
    } else {
        std::ifstream f(path);
        if (!f) throw tg::ParseError("cannot open " + path);
        text = slurp(f);
    }
    tg::Graph g = tg::parse_graph(text);
    tg::require_valid(g);
    return g;
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

json factor_map_json(const tg::FactorMap& m) {
    json out;
    out["vertex_map"] = m.vertex_map;
    out["edge_map"] = m.edge_map;
    return out;
}

std::string isotropy_str(long long p) {
    if (p == 0) return "0";
    if (p == 1) return "Z";
    return std::to_string(p) + "Z";
}

struct CommonOpts {
    std::string input = "-";
    bool as_json = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input, "graph file (default stdin)");
        cmd->add_flag("--json", as_json, "JSON output");
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operations on finitely presented topological graphs"};
    app.require_subcommand(1);

    CommonOpts classify_o, dual_o, iterate_o, paths_o, boundary_o, orbit_o, isotropy_o,
        ktheory_o, unital_o, check_o;
    int iterate_k = 1;
    int paths_max_len = 3;
    int boundary_max_len = 3, boundary_max_cycle = 3;
    std::string orbit_literal, isotropy_literal;
    int orbit_bound = 3;
    std::vector<std::string> ktheory_relative;
    bool ktheory_toeplitz = false;
    std::string iso_a, iso_b;
    bool iso_json = false;
    std::uint64_t check_seed = 1, check_cases = 100;
    bool check_partial = false, check_omega = false;

    auto* c_classify = app.add_subcommand("classify", "regular/singular vertex classes");
    classify_o.attach(c_classify);

    auto* c_dual = app.add_subcommand(
        "dual", "dual graph (relative dual when the input declares a relative set)");
    dual_o.attach(c_dual);

    auto* c_iterate = app.add_subcommand("iterate", "k-fold dual");
    iterate_o.attach(c_iterate);
    c_iterate->add_option("--k", iterate_k, "number of dual steps")->required();

    auto* c_paths = app.add_subcommand("paths", "finite paths up to a length");
    paths_o.attach(c_paths);
    c_paths->add_option("--max-len", paths_max_len, "maximum path length");

    auto* c_boundary = app.add_subcommand("boundary", "boundary paths within bounds");
    boundary_o.attach(c_boundary);
    c_boundary->add_option("--max-len", boundary_max_len, "finite/prefix length bound");
    c_boundary->add_option("--max-cycle", boundary_max_cycle, "lasso cycle length bound");

    auto* c_orbit = app.add_subcommand("orbit", "tail-equivalence orbit of a boundary path");
    orbit_o.attach(c_orbit);
    c_orbit->add_option("path", orbit_literal, "boundary path literal")->required();
    c_orbit->add_option("--bound", orbit_bound, "representation bound");

    auto* c_isotropy = app.add_subcommand("isotropy", "isotropy subgroup at a boundary path");
    isotropy_o.attach(c_isotropy);
    c_isotropy->add_option("path", isotropy_literal, "boundary path literal")->required();

    auto* c_ktheory = app.add_subcommand("ktheory", "K-groups of the graph algebra");
    ktheory_o.attach(c_ktheory);
    c_ktheory->add_option("--relative", ktheory_relative, "relative subset U (comma separated)")
        ->delimiter(',');
    c_ktheory->add_flag("--toeplitz", ktheory_toeplitz, "U = ∅ (Toeplitz algebra)");

    auto* c_unital = app.add_subcommand("unital", "unitality decision with certificate");
    unital_o.attach(c_unital);

    auto* c_iso = app.add_subcommand("iso", "graph isomorphism search");
    c_iso->add_option("a", iso_a, "first graph file ('-' = stdin)")->required();
    c_iso->add_option("b", iso_b, "second graph file ('-' = stdin)")->required();
    c_iso->add_flag("--json", iso_json, "JSON output");

    auto* c_check = app.add_subcommand("check", "randomized cross-construction suite");
    check_o.attach(c_check);
    c_check->add_option("--seed", check_seed, "generator seed");
    c_check->add_option("--cases", check_cases, "number of cases");
    c_check->add_flag("--partial", check_partial, "generate partial range maps");
    c_check->add_flag("--omega", check_omega, "generate ω-multiplicity groups");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_classify->parsed()) {
            tg::Graph g = load_graph(classify_o.input);
            auto cls = tg::classify(g);
            json jv = json::array();
            std::ostringstream os;
            for (const auto& v : tg::canonicalized(g).vertices) {
                os << v << ": " << tg::vertex_class_name(cls.cls.at(v)) << " (receives "
                   << cls.receiver.at(v).str() << ")\n";
                jv.push_back({{"id", v},
                              {"class", tg::vertex_class_name(cls.cls.at(v))},
                              {"receives", cls.receiver.at(v).str()}});
            }
            emit(classify_o.as_json, json{{"command", "classify"}, {"vertices", jv}}, os.str());
        } else if (c_dual->parsed()) {
            tg::Graph g = load_graph(dual_o.input);
            tg::DualResult dr =
                g.relative ? tg::relative_dual(g, *g.relative) : tg::dual(g);
            json j{{"command", "dual"}, {"graph", tg::print_graph(dr.graph)}};
            j.update(factor_map_json(dr.to_base));
            emit(dual_o.as_json, j, tg::print_graph(dr.graph));
        } else if (c_iterate->parsed()) {
            tg::Graph g = load_graph(iterate_o.input);
            auto it = tg::iterate(g, iterate_k);
            json j{{"command", "iterate"},
                   {"k", iterate_k},
                   {"graph", tg::print_graph(it.stages.back())}};
            j.update(factor_map_json(it.to_base));
            emit(iterate_o.as_json, j, tg::print_graph(it.stages.back()));
        } else if (c_paths->parsed()) {
            tg::Graph g = load_graph(paths_o.input);
            std::vector<std::string> lines;
            for (int n = 0; n <= paths_max_len; ++n)
                for (const auto& p : tg::enumerate_paths(g, n)) lines.push_back(tg::to_string(p));
            emit(paths_o.as_json,
                 json{{"command", "paths"}, {"max_len", paths_max_len}, {"paths", lines}},
                 lines.empty() ? "" : join(lines, "\n") + "\n");
        } else if (c_boundary->parsed()) {
            tg::Graph g = load_graph(boundary_o.input);
            std::vector<std::string> lines;
            for (const auto& x : tg::boundary_finite(g, boundary_max_len))
                lines.push_back(tg::to_string(x));
            for (const auto& x : tg::lassos(g, boundary_max_len, boundary_max_cycle))
                lines.push_back(tg::to_string(x));
            emit(boundary_o.as_json,
                 json{{"command", "boundary"},
                      {"max_len", boundary_max_len},
                      {"max_cycle", boundary_max_cycle},
                      {"paths", lines}},
                 lines.empty() ? "" : join(lines, "\n") + "\n");
        } else if (c_orbit->parsed()) {
            tg::Graph g = load_graph(orbit_o.input);
            tg::BoundaryPath x = tg::parse_boundary_path(g, orbit_literal);
            std::vector<std::string> lines;
            for (const auto& y : tg::orbit(g, x, orbit_bound)) lines.push_back(tg::to_string(y));
            emit(orbit_o.as_json,
                 json{{"command", "orbit"},
                      {"of", orbit_literal},
                      {"bound", orbit_bound},
                      {"paths", lines}},
                 lines.empty() ? "" : join(lines, "\n") + "\n");
        } else if (c_isotropy->parsed()) {
            tg::Graph g = load_graph(isotropy_o.input);
            tg::BoundaryPath x = tg::parse_boundary_path(g, isotropy_literal);
            long long p = tg::isotropy(x).period;
            emit(isotropy_o.as_json,
                 json{{"command", "isotropy"},
                      {"of", isotropy_literal},
                      {"period", p},
                      {"group", isotropy_str(p)}},
                 isotropy_str(p) + "\n");
        } else if (c_ktheory->parsed()) {
            tg::Graph g = load_graph(ktheory_o.input);
            if (ktheory_toeplitz && !ktheory_relative.empty())
                throw std::domain_error("ktheory: --toeplitz and --relative are exclusive");
            std::optional<std::set<tg::VertexId>> u;
            if (ktheory_toeplitz)
                u.emplace();
            else if (!ktheory_relative.empty())
                u.emplace(ktheory_relative.begin(), ktheory_relative.end());
            else if (g.relative)
                u = *g.relative;
            tg::IntMatrix m = tg::build_map(g, u);
            tg::KGroups kg = tg::k_groups(g, u);
            auto snf = tg::smith_normal_form(m.a);
            json jm = json::array();
            for (const auto& row : m.a) {
                json jr = json::array();
                for (const auto& x : row) jr.push_back(x.str());
                jm.push_back(jr);
            }
            json jf = json::array();
            for (const auto& d : snf.invariant_factors) jf.push_back(d.str());
            emit(ktheory_o.as_json,
                 json{{"command", "ktheory"},
                      {"k0", kg.k0.str()},
                      {"k1", kg.k1.str()},
                      {"rows", m.row_ids},
                      {"cols", m.col_ids},
                      {"matrix", jm},
                      {"invariant_factors", jf}},
                 "K0 = " + kg.k0.str() + ", K1 = " + kg.k1.str() + "\n");
        } else if (c_unital->parsed()) {
            tg::Graph g = load_graph(unital_o.input);
            auto [unital, r] = tg::is_unital(g);
            std::string text = unital
                                   ? "unital (" + join(r.reasons, ", ") + ")"
                                   : "non-unital (∞ singular: " + join(r.reasons, ", ") + ")";
            emit(unital_o.as_json,
                 json{{"command", "unital"},
                      {"unital", unital},
                      {"verdict", tg::verdict_name(r.verdict)},
                      {"undefined_edges", r.undefined_edges.str()},
                      {"escaping", r.escaping.str()},
                      {"never_received", r.never_received.str()},
                      {"reasons", r.reasons}},
                 text + "\n");
        } else if (c_iso->parsed()) {
            if (iso_a == "-" && iso_b == "-")
                throw std::domain_error("iso: only one input may come from stdin");
            tg::Graph a = load_graph(iso_a);
            tg::Graph b = load_graph(iso_b);
            auto iso = tg::isomorphic(a, b);
            json j{{"command", "iso"}, {"isomorphic", iso.has_value()}};
            if (iso) {
                j["vertex_map"] = iso->vertex_map;
                j["edge_map"] = iso->edge_map;
            }
            emit(iso_json, j, iso ? "isomorphic\n" : "not isomorphic\n");
        } else if (c_check->parsed()) {
            tg::GenConfig cfg;
            cfg.seed = check_seed;
            cfg.allow_partial = check_partial;
            cfg.allow_omega = check_omega;
            cfg.allow_relative = true;
            tg::SuiteReport report = tg::run_suite(cfg, check_cases);
            emit(check_o.as_json,
                 json{{"command", "check"},
                      {"passed", report.all_passed()},
                      {"cases", report.cases},
                      {"failures", report.failures()},
                      {"report", report.render()}},
                 report.render());
            return report.all_passed() ? 0 : 1;
        }
    } catch (const tg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
