#include "topograph/dual.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "topograph/paths.hpp"

namespace topograph {

namespace {

std::string pair_name(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

std::string infinity_name(const std::string& a) { return pair_name(a, kInfinityMark); }

void require_dualizable(const Graph& g, const char* op) {
    require_valid(g);
    if (!g.total()) throw std::domain_error(std::string(op) + ": r is partial");
    if (!g.plain())
        throw std::domain_error(std::string(op) +
                                ": graph must be finite with plain (multiplicity 1) edges");
}

void check_fresh_names(const Graph& g, const char* op) {
    auto bad = validate(g);
    if (!bad.empty())
        throw std::logic_error(std::string(op) + ": minted graph invalid (" + bad.front() +
                               "); rename input ids");
}

}  // namespace

FactorMap compose_factor_maps(const FactorMap& outer, const FactorMap& inner) {
    FactorMap out;
    for (const auto& [a, b] : inner.vertex_map) out.vertex_map[a] = outer.vertex_map.at(b);
    for (const auto& [a, b] : inner.edge_map) out.edge_map[a] = outer.edge_map.at(b);
    return out;
}

FactorMap identity_factor_map(const Graph& g) {
    FactorMap out;
    for (const auto& v : g.vertices) out.vertex_map[v] = v;
    for (const auto& e : g.groups) out.edge_map[e.id] = e.id;
    return out;
}

DualResult relative_dual(const Graph& g, const std::set<VertexId>& u) {
    require_dualizable(g, "relative_dual");
    Graph c = canonicalized(g);
    auto cls = classify(c);
    for (const auto& v : u)
        if (!c.has_vertex(v) || !cls.is_regular(v))
            throw std::domain_error("relative_dual: U ⊄ E⁰_rg (" + v + ")");

    DualResult out;
    Graph& d = out.graph;
    // Pair vertices (r(e),e), then at-infinity vertices (v,∞) for v ∉ U.
    for (const auto& e : c.groups) {
        d.vertices.push_back(pair_name(*e.range, e.id));
        out.to_base.vertex_map[d.vertices.back()] = *e.range;
    }
    for (const auto& v : c.vertices) {
        if (u.count(v)) continue;
        d.vertices.push_back(infinity_name(v));
        out.to_base.vertex_map[d.vertices.back()] = v;
    }
    // Pair edges (e',e) for composable d(e') = r(e); at-infinity edges
    // (e',∞) when d(e') ∉ U. Both have range (r(e'),e').
    for (const auto& ep : c.groups) {
        for (const auto& e : c.groups) {
            if (ep.dom != *e.range) continue;
            EdgeGroup ng;
            ng.id = pair_name(ep.id, e.id);
            ng.dom = pair_name(ep.dom, e.id);
            ng.range = pair_name(*ep.range, ep.id);
            d.groups.push_back(std::move(ng));
            out.to_base.edge_map[pair_name(ep.id, e.id)] = ep.id;
        }
        if (!u.count(ep.dom)) {
            EdgeGroup ng;
            ng.id = infinity_name(ep.id);
            ng.dom = infinity_name(ep.dom);
            ng.range = pair_name(*ep.range, ep.id);
            d.groups.push_back(std::move(ng));
            out.to_base.edge_map[infinity_name(ep.id)] = ep.id;
        }
    }
    d = canonicalized(std::move(d));
    check_fresh_names(d, "relative_dual");
    return out;
}

DualResult dual(const Graph& g) {
    require_dualizable(g, "dual");
    return relative_dual(g, classify(g).regular());
}

IterateResult iterate(const Graph& g, int k) {
    require_dualizable(g, "iterate");
    if (k < 0) throw std::domain_error("iterate: negative k");
    IterateResult out;
    out.stages.push_back(canonicalized(g));
    for (int j = 0; j < k; ++j) {
        DualResult dr = dual(out.stages.back());
        out.stages.push_back(std::move(dr.graph));
        out.steps.push_back(std::move(dr.to_base));
    }
    out.to_base = identity_factor_map(out.stages.front());
    for (const auto& step : out.steps) out.to_base = compose_factor_maps(out.to_base, step);
    return out;
}

std::string product_tuple_name(const std::string& head, const std::vector<std::string>& coords,
                               int pad_to) {
    std::string out = "(" + head;
    for (const auto& e : coords) out += "," + e;
    for (int i = static_cast<int>(coords.size()); i < pad_to; ++i) out += "," + kInfinityMark;
    return out + ")";
}

DualResult iterate_product(const Graph& g, int k) {
    require_dualizable(g, "iterate_product");
    if (k < 0) throw std::domain_error("iterate_product: negative k");
    Graph c = canonicalized(g);
    auto cls = classify(c);
    const auto& tuple_name = product_tuple_name;

    DualResult out;
    // Vertex tuples (v,e1,...,ek): a path of length j ≤ k read from its
    // range, padded with ∞; padding requires the path to end singular.
    for (int j = 0; j <= k; ++j) {
        for (const auto& p : enumerate_paths(c, j)) {
            if (j < k && !cls.is_singular(p.base)) continue;
            VertexId v = path_range(c, p);
            std::string name = tuple_name(v, p.edges, k);
            out.graph.vertices.push_back(name);
            out.to_base.vertex_map[name] = v;
        }
    }
    // Edge tuples (e0,e1,...,ek): paths of length j+1, 0 ≤ j ≤ k, padded.
    for (int j = 0; j <= k; ++j) {
        for (const auto& p : enumerate_paths(c, j + 1)) {
            if (j < k && !cls.is_singular(p.base)) continue;
            const EdgeId& e0 = p.edges.front();
            const EdgeGroup* head = c.find_group(e0);
            std::string name = tuple_name(e0, {p.edges.begin() + 1, p.edges.end()}, k);
            EdgeGroup ng;
            ng.id = name;
            ng.dom = tuple_name(head->dom, {p.edges.begin() + 1, p.edges.end()}, k);
            // r drops the last tuple coordinate, which is an ∞ pad when the
            // underlying path is shorter than the tuple.
            std::vector<std::string> rcoords(p.edges.begin(),
                                             j == k ? p.edges.end() - 1 : p.edges.end());
            ng.range = tuple_name(*head->range, rcoords, k);
            out.graph.groups.push_back(std::move(ng));
            out.to_base.edge_map[name] = e0;
        }
    }
    out.graph = canonicalized(std::move(out.graph));
    check_fresh_names(out.graph, "iterate_product");
    return out;
}

std::vector<std::string> check_factor_map(const FactorMap& m, const Graph& source,
                                          const Graph& target,
                                          const std::optional<std::set<VertexId>>& relative_to) {
    require_valid(source);
    require_valid(target);
    if (!source.total() || !target.total())
        throw std::domain_error("check_factor_map: graphs must be total");
    std::vector<std::string> out;

    auto scls = classify(source);
    auto tcls = classify(target);
    std::set<VertexId> reg_target = relative_to ? *relative_to : tcls.regular();

    for (const auto& v : source.vertices) {
        auto it = m.vertex_map.find(v);
        if (it == m.vertex_map.end()) {
            out.push_back("m⁰ undefined at " + v);
        } else if (!target.has_vertex(it->second)) {
            out.push_back("m⁰(" + v + ") is not a target vertex");
        }
    }
    for (const auto& e : source.groups) {
        auto it = m.edge_map.find(e.id);
        if (it == m.edge_map.end()) {
            out.push_back("m¹ undefined at " + e.id);
            continue;
        }
        const EdgeGroup* te = target.find_group(it->second);
        if (!te) {
            out.push_back("m¹(" + e.id + ") is not a target edge");
            continue;
        }
        auto v0 = m.vertex_map.find(e.dom);
        auto v1 = m.vertex_map.find(*e.range);
        if (v0 != m.vertex_map.end() && v0->second != te->dom)
            out.push_back("square d∘m¹ = m⁰∘d fails at " + e.id);
        if (v1 != m.vertex_map.end() && v1->second != *te->range)
            out.push_back("square r∘m¹ = m⁰∘r fails at " + e.id);
    }
    // Unique d-lifting: for a target edge e' and a source vertex x over
    // d(e'), exactly one source edge over e' starts at x.
    {
        std::map<VertexId, std::vector<VertexId>> fiber;  // target vertex -> source vertices
        for (const auto& v : source.vertices) {
            auto vm = m.vertex_map.find(v);
            if (vm != m.vertex_map.end()) fiber[vm->second].push_back(v);
        }
        std::map<std::pair<EdgeId, VertexId>, int> lifts;  // (m¹(y), d(y)) -> count
        for (const auto& se : source.groups) {
            auto em = m.edge_map.find(se.id);
            if (em != m.edge_map.end()) ++lifts[{em->second, se.dom}];
        }
        for (const auto& te : target.groups) {
            auto it = fiber.find(te.dom);
            if (it == fiber.end()) continue;
            for (const auto& v : it->second) {
                auto lt = lifts.find({te.id, v});
                int count = lt == lifts.end() ? 0 : lt->second;
                if (count != 1)
                    out.push_back("lifting of " + te.id + " at " + v + " has " +
                                  std::to_string(count) + " solutions");
            }
        }
    }
    {
        std::set<VertexId> image;
        for (const auto& [a, b] : m.vertex_map) image.insert(b);
        for (const auto& v : target.vertices)
            if (!image.count(v)) out.push_back("m⁰ not surjective: misses " + v);
    }
    for (const auto& v : source.vertices) {
        auto vm = m.vertex_map.find(v);
        if (vm == m.vertex_map.end()) continue;
        if (reg_target.count(vm->second) && !scls.is_regular(v))
            out.push_back("regularity fails at " + v + " over " + vm->second);
    }
    return out;
}

namespace {

// Degree signature used to prune the vertex assignment search.
struct VertexSig {
    int out_defined = 0;
    int out_undefined = 0;
    int in = 0;
    int loops = 0;
    int out_omega = 0;
    int in_omega = 0;

    auto key() const { return std::tie(out_defined, out_undefined, in, loops, out_omega, in_omega); }
    bool operator==(const VertexSig& o) const { return key() == o.key(); }
};

std::map<VertexId, VertexSig> signatures(const Graph& g) {
    std::map<VertexId, VertexSig> out;
    for (const auto& v : g.vertices) out[v];
    for (const auto& e : g.groups) {
        bool omega = e.multiplicity.is_omega();
        if (omega)
            out[e.dom].out_omega++;
        else if (e.range)
            out[e.dom].out_defined++;
        else
            out[e.dom].out_undefined++;
        if (e.range) {
            if (omega)
                out[*e.range].in_omega++;
            else
                out[*e.range].in++;
            if (*e.range == e.dom && !omega) out[e.dom].loops++;
        }
    }
    return out;
}

// Bucket of parallel edges: (dom, range-or-∞-mark, multiplicity kind).
using EdgeKey = std::tuple<VertexId, std::string, bool>;

std::map<EdgeKey, std::vector<EdgeId>> edge_buckets(const Graph& g) {
    std::map<EdgeKey, std::vector<EdgeId>> out;
    for (const auto& e : g.groups) {
        EdgeKey k{e.dom, e.range ? *e.range : "\x01undef", e.multiplicity.is_omega()};
        out[k].push_back(e.id);
    }
    for (auto& [k, es] : out) std::sort(es.begin(), es.end());
    return out;
}

}  // namespace

std::optional<GraphIsomorphism> isomorphic(const Graph& a_in, const Graph& b_in) {
    Graph a = canonicalized(a_in), b = canonicalized(b_in);
    require_valid(a);
    require_valid(b);
    if (a.vertices.size() != b.vertices.size() || a.groups.size() != b.groups.size())
        return std::nullopt;
    auto siga = signatures(a), sigb = signatures(b);

    std::optional<GraphIsomorphism> result;
    std::map<VertexId, VertexId> assign;
    std::set<VertexId> used;
    // Assign vertices of a in sorted order to candidates of b in sorted
    // order; plain backtracking, degree signatures prune.
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == a.vertices.size()) {
            // Vertex map fixed: every edge bucket of a must match the
            // corresponding bucket of b with equal cardinality.
            auto ba = edge_buckets(a);
            auto bb = edge_buckets(b);
            if (ba.size() != bb.size()) return false;
            GraphIsomorphism iso;
            iso.vertex_map = assign;
            for (const auto& [key, esa] : ba) {
                const auto& [dom, rng, om] = key;
                EdgeKey keyb{assign.at(dom),
                             rng == "\x01undef" ? rng : assign.at(rng), om};
                auto it = bb.find(keyb);
                if (it == bb.end() || it->second.size() != esa.size()) return false;
                for (std::size_t j = 0; j < esa.size(); ++j) iso.edge_map[esa[j]] = it->second[j];
            }
            result = std::move(iso);
            return true;
        }
        const VertexId& v = a.vertices[i];
        for (const auto& w : b.vertices) {
            if (used.count(w) || !(siga.at(v) == sigb.at(w))) continue;
            assign[v] = w;
            used.insert(w);
            if (go(i + 1)) return true;
            assign.erase(v);
            used.erase(w);
        }
        return false;
    };
    if (go(0)) return result;
    return std::nullopt;
}

}  // namespace topograph
