#include "topograph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace topograph {

bool Graph::has_vertex(const VertexId& v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

const EdgeGroup* Graph::find_group(const EdgeId& e) const {
    for (const auto& g : groups)
        if (g.id == e) return &g;
    return nullptr;
}

bool Graph::total() const {
    for (const auto& g : groups)
        if (!g.range) return false;
    return true;
}

bool Graph::plain() const {
    for (const auto& g : groups)
        if (g.multiplicity != Cardinal::finite(1)) return false;
    return true;
}

bool Graph::finite_presented() const {
    for (const auto& g : groups)
        if (g.multiplicity.is_omega()) return false;
    return true;
}

Graph canonicalized(Graph g) {
    std::sort(g.vertices.begin(), g.vertices.end());
    std::sort(g.groups.begin(), g.groups.end(),
              [](const EdgeGroup& a, const EdgeGroup& b) { return a.id < b.id; });
    return g;
}

std::string vertex_class_name(VertexClass c) {
    switch (c) {
        case VertexClass::Regular: return "Regular";
        case VertexClass::SingularSource: return "SingularSource";
        case VertexClass::SingularInfiniteReceiver: return "SingularInfiniteReceiver";
    }
    return "?";
}

std::set<VertexId> VertexClassification::regular() const {
    std::set<VertexId> out;
    for (const auto& [v, c] : cls)
        if (c == VertexClass::Regular) out.insert(v);
    return out;
}

std::set<VertexId> VertexClassification::singular() const {
    std::set<VertexId> out;
    for (const auto& [v, c] : cls)
        if (c != VertexClass::Regular) out.insert(v);
    return out;
}

namespace {

bool id_token_ok(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id)
        if (c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::vector<std::string> validate(const Graph& g) {
    std::vector<std::string> out;
    std::set<VertexId> vs;
    for (const auto& v : g.vertices) {
        if (!id_token_ok(v)) out.push_back("bad vertex id: '" + v + "'");
        if (!vs.insert(v).second) out.push_back("duplicate vertex id: " + v);
    }
    std::set<EdgeId> es;
    for (const auto& e : g.groups) {
        if (!id_token_ok(e.id)) out.push_back("bad edge id: '" + e.id + "'");
        if (!es.insert(e.id).second) out.push_back("duplicate edge id: " + e.id);
        if (e.multiplicity.is_finite() && e.multiplicity.value() == 0)
            out.push_back("edge " + e.id + " has multiplicity 0");
        if (!vs.count(e.dom)) out.push_back("unknown vertex " + e.dom + " (dom of " + e.id + ")");
        if (e.range && !vs.count(*e.range))
            out.push_back("unknown vertex " + *e.range + " (range of " + e.id + ")");
    }
    if (out.empty() && g.relative) {
        auto cls = classify(g);
        for (const auto& v : *g.relative) {
            if (!vs.count(v))
                out.push_back("unknown vertex " + v + " (relative)");
            else if (!cls.is_regular(v))
                out.push_back("U ⊄ E⁰_rg: " + v + " is " + vertex_class_name(cls.cls.at(v)));
        }
    }
    if (g.escape == Escape::Omega) {
        bool any_undefined = false;
        for (const auto& e : g.groups)
            if (!e.range) any_undefined = true;
        if (!any_undefined)
            out.push_back("escape omega requires at least one undefined-range edge");
    }
    return out;
}

void require_valid(const Graph& g) {
    auto v = validate(g);
    if (v.empty()) return;
    std::ostringstream os;
    os << "invalid graph:";
    for (const auto& s : v) os << " [" << s << "]";
    throw std::invalid_argument(os.str());
}

VertexClassification classify(const Graph& g) {
    VertexClassification out;
    for (const auto& v : g.vertices) out.receiver[v] = Cardinal::finite(0);
    for (const auto& e : g.groups)
        if (e.range) out.receiver[*e.range] = out.receiver[*e.range] + e.multiplicity;
    for (const auto& v : g.vertices) {
        Cardinal rc = out.receiver[v];
        if (rc == Cardinal::finite(0))
            out.cls[v] = VertexClass::SingularSource;
        else if (rc.is_omega())
            out.cls[v] = VertexClass::SingularInfiniteReceiver;
        else
            out.cls[v] = VertexClass::Regular;
    }
    return out;
}

bool is_sgds(const Graph& g) {
    require_valid(g);
    if (!g.total()) throw std::domain_error("is_sgds: r is partial");
    auto cls = classify(g);
    for (const auto& [v, rc] : cls.receiver)
        if (Cardinal::finite(1) < rc) return false;
    return true;
}

Completion tilde_completion(const Graph& g) {
    require_valid(g);
    if (!g.finite_presented())
        throw std::domain_error("tilde_completion: ω-groups are not completable");
    if (g.escape == Escape::Omega)
        throw std::domain_error(
            "tilde_completion: escaping ranges accumulate at the added point");
    VertexId inf = "∞";
    while (g.has_vertex(inf)) inf += "'";
    Completion out;
    out.infinity_vertex = inf;
    out.graph = g;
    out.graph.vertices.push_back(inf);
    for (auto& e : out.graph.groups)
        if (!e.range) e.range = inf;
    out.graph.relative.reset();
    out.graph = canonicalized(std::move(out.graph));
    return out;
}

Graph restrict_to(const Graph& f, const std::set<VertexId>& e0) {
    require_valid(f);
    if (!f.total()) throw std::domain_error("restrict_to: source graph must be total");
    for (const auto& v : e0)
        if (!f.has_vertex(v))
            throw std::domain_error("restrict_to: " + v + " is not a vertex of the source");
    for (const auto& e : f.groups)
        if (!e0.count(e.dom))
            throw std::domain_error("restrict_to: edge " + e.id + " has dom outside the subset");
    Graph out;
    out.vertices.assign(e0.begin(), e0.end());
    for (const auto& e : f.groups) {
        EdgeGroup ng = e;
        if (ng.range && !e0.count(*ng.range)) ng.range.reset();
        out.groups.push_back(std::move(ng));
    }
    return canonicalized(std::move(out));
}

}  // namespace topograph
