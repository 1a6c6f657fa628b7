#include "topograph/paths.hpp"

#include "topograph/textio.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace topograph {

namespace {

struct EdgeIndex {
    std::map<VertexId, std::vector<const EdgeGroup*>> by_range;  // defined ranges only

    explicit EdgeIndex(const Graph& g) {
        for (const auto& e : g.groups)
            if (e.range) by_range[*e.range].push_back(&e);
        for (auto& [v, es] : by_range)
            std::sort(es.begin(), es.end(),
                      [](const EdgeGroup* a, const EdgeGroup* b) { return a->id < b->id; });
    }
};

void require_plain_total(const Graph& g, const char* op) {
    require_valid(g);
    if (!g.total()) throw std::domain_error(std::string(op) + ": r is partial");
    if (!g.plain())
        throw std::domain_error(std::string(op) + ": graph must have plain (multiplicity 1) edges");
}

}  // namespace

VertexId path_range(const Graph& g, const Path& p) {
    if (p.edges.empty()) return p.base;
    const EdgeGroup* e = g.find_group(p.edges.front());
    if (!e || !e->range) throw std::domain_error("path_range: edge " + p.edges.front() + " unusable");
    return *e->range;
}

VertexId range_vertex(const Graph& g, const BoundaryPath& x) {
    if (x.is_finite()) return path_range(g, x.finite());
    const auto& l = x.lasso();
    const EdgeId& first = l.prefix.empty() ? l.cycle.front() : l.prefix.front();
    const EdgeGroup* e = g.find_group(first);
    if (!e || !e->range) throw std::domain_error("range_vertex: edge " + first + " unusable");
    return *e->range;
}

std::vector<Path> enumerate_paths(const Graph& g, int n) {
    require_plain_total(g, "enumerate_paths");
    if (n < 0) throw std::domain_error("enumerate_paths: negative length");
    Graph c = canonicalized(g);
    std::vector<Path> cur;
    for (const auto& v : c.vertices) cur.push_back(Path{v, {}});
    EdgeIndex idx(c);
    for (int len = 0; len < n; ++len) {
        std::vector<Path> next;
        for (const auto& p : cur) {
            auto it = idx.by_range.find(p.base);
            if (it == idx.by_range.end()) continue;
            for (const EdgeGroup* e : it->second) {
                Path q = p;
                q.edges.push_back(e->id);
                q.base = e->dom;
                next.push_back(std::move(q));
            }
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

std::vector<BoundaryPath> boundary_finite(const Graph& g, int max_len) {
    require_plain_total(g, "boundary_finite");
    auto cls = classify(g);
    std::vector<BoundaryPath> out;
    for (int n = 0; n <= max_len; ++n)
        for (auto& p : enumerate_paths(g, n))
            if (cls.is_singular(p.base)) out.push_back(BoundaryPath{std::move(p)});
    std::sort(out.begin(), out.end());
    return out;
}

Lasso canonical_lasso(std::vector<EdgeId> prefix, std::vector<EdgeId> cycle) {
    if (cycle.empty()) throw std::domain_error("canonical_lasso: empty cycle");
    // Primitive root of the cycle word.
    std::size_t p = cycle.size();
    for (std::size_t d = 1; d <= p; ++d) {
        if (p % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < p && ok; ++i)
            if (cycle[i] != cycle[i % d]) ok = false;
        if (ok) {
            cycle.resize(d);
            break;
        }
    }
    // Shortest prefix: while the prefix ends with the cycle's last edge,
    // absorb it by rotating the cycle one step to the right.
    while (!prefix.empty() && prefix.back() == cycle.back()) {
        prefix.pop_back();
        std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
    }
    return Lasso{std::move(prefix), std::move(cycle)};
}

std::vector<BoundaryPath> lassos(const Graph& g, int max_prefix, int max_cycle) {
    require_plain_total(g, "lassos");
    Graph c = canonicalized(g);
    std::vector<BoundaryPath> out;
    // Closed primitive cycles of each length, every rotation separately:
    // a distinct starting edge is a distinct one-sided infinite path.
    std::vector<std::vector<EdgeId>> cycles;
    for (int p = 1; p <= max_cycle; ++p) {
        for (const auto& path : enumerate_paths(c, p)) {
            if (path_range(c, path) != path.base) continue;  // not closed
            Lasso l = canonical_lasso({}, path.edges);
            if (static_cast<int>(l.cycle.size()) != p) continue;  // non-primitive
            cycles.push_back(path.edges);
        }
    }
    std::vector<Path> prefixes;
    for (int m = 1; m <= max_prefix; ++m)
        for (auto& p : enumerate_paths(c, m)) prefixes.push_back(std::move(p));
    for (const auto& cyc : cycles) {
        out.push_back(BoundaryPath{Lasso{{}, cyc}});
        const VertexId head = *c.find_group(cyc.front())->range;  // r(c1)
        for (const auto& pre : prefixes) {
            if (pre.base != head) continue;                  // does not compose into cycle
            if (pre.edges.back() == cyc.back()) continue;    // prefix not shortest
            out.push_back(BoundaryPath{Lasso{pre.edges, cyc}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BoundaryPath shift(const BoundaryPath& x) {
    if (x.is_finite()) {
        const Path& p = x.finite();
        if (p.edges.empty()) throw std::domain_error("shift: not in dom(σ)");
        Path q = p;
        q.edges.erase(q.edges.begin());
        return BoundaryPath{std::move(q)};
    }
    Lasso l = x.lasso();
    if (!l.prefix.empty()) {
        l.prefix.erase(l.prefix.begin());
        return BoundaryPath{canonical_lasso(std::move(l.prefix), std::move(l.cycle))};
    }
    std::rotate(l.cycle.begin(), l.cycle.begin() + 1, l.cycle.end());
    return BoundaryPath{canonical_lasso({}, std::move(l.cycle))};
}

BoundaryPath shift_pow(const BoundaryPath& x, long long m) {
    if (m < 0) throw std::domain_error("shift_pow: negative power");
    BoundaryPath cur = x;
    for (long long i = 0; i < m; ++i) cur = shift(cur);
    return cur;
}

std::vector<std::string> truncate(const Graph& g, const BoundaryPath& x, int k) {
    std::vector<std::string> out;
    out.push_back(range_vertex(g, x));
    if (x.is_finite()) {
        const auto& es = x.finite().edges;
        for (int i = 0; i < k; ++i)
            out.push_back(i < static_cast<int>(es.size()) ? es[i] : kInfinityMark);
    } else {
        const auto& l = x.lasso();
        for (int i = 0; i < k; ++i) {
            if (i < static_cast<int>(l.prefix.size()))
                out.push_back(l.prefix[i]);
            else
                out.push_back(l.cycle[(i - l.prefix.size()) % l.cycle.size()]);
        }
    }
    return out;
}

std::string truncate_name(const Graph& g, const BoundaryPath& x, int k) {
    auto parts = truncate(g, x, k);
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    return out + ")";
}

std::string to_string(const Path& p) {
    if (p.edges.empty()) return p.base;
    std::string out;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (i) out += ",";
        out += p.edges[i];
    }
    return out;
}

std::string to_string(const BoundaryPath& x) {
    if (x.is_finite()) return to_string(x.finite());
    const auto& l = x.lasso();
    std::string out;
    for (std::size_t i = 0; i < l.prefix.size(); ++i) {
        if (i) out += ",";
        out += l.prefix[i];
    }
    out += "|(";
    for (std::size_t i = 0; i < l.cycle.size(); ++i) {
        if (i) out += ",";
        out += l.cycle[i];
    }
    out += ")^ω";
    return out;
}

namespace {

std::vector<EdgeId> split_csv(const std::string& s) {
    std::vector<EdgeId> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

std::vector<std::string> check_boundary_path(const Graph& g, const BoundaryPath& x) {
    std::vector<std::string> out;
    auto cls = classify(g);
    auto edge_of = [&](const EdgeId& e) -> const EdgeGroup* {
        const EdgeGroup* eg = g.find_group(e);
        if (!eg)
            out.push_back("unknown edge " + e);
        else if (!eg->range)
            out.push_back("edge " + e + " has undefined range");
        return eg && eg->range ? eg : nullptr;
    };
    auto check_word = [&](const std::vector<EdgeId>& es) {
        for (std::size_t i = 0; i + 1 < es.size(); ++i) {
            const EdgeGroup* a = edge_of(es[i]);
            const EdgeGroup* b = edge_of(es[i + 1]);
            if (a && b && a->dom != *b->range)
                out.push_back("edges " + es[i] + "," + es[i + 1] + " do not compose");
        }
        if (es.size() == 1) edge_of(es[0]);
    };
    if (x.is_finite()) {
        const Path& p = x.finite();
        check_word(p.edges);
        if (p.edges.empty()) {
            if (!g.has_vertex(p.base))
                out.push_back("unknown vertex " + p.base);
            else if (!cls.is_singular(p.base))
                out.push_back("vertex " + p.base + " is regular; not a boundary path");
        } else {
            const EdgeGroup* last = g.find_group(p.edges.back());
            if (last && last->dom != p.base) out.push_back("base does not match d of last edge");
            if (last && !cls.is_singular(last->dom))
                out.push_back("d(path) = " + last->dom + " is regular; not a boundary path");
        }
    } else {
        const Lasso& l = x.lasso();
        if (l.cycle.empty()) {
            out.push_back("empty cycle");
            return out;
        }
        check_word(l.prefix);
        check_word(l.cycle);
        const EdgeGroup* cyc_last = edge_of(l.cycle.back());
        const EdgeGroup* cyc_first = edge_of(l.cycle.front());
        if (cyc_last && cyc_first && cyc_last->dom != *cyc_first->range)
            out.push_back("cycle does not close");
        if (!l.prefix.empty()) {
            const EdgeGroup* pre_last = edge_of(l.prefix.back());
            if (pre_last && cyc_first && pre_last->dom != *cyc_first->range)
                out.push_back("prefix does not compose into the cycle");
        }
        Lasso canon = canonical_lasso(l.prefix, l.cycle);
        if (!(canon == l)) out.push_back("lasso not in canonical form");
    }
    return out;
}

BoundaryPath parse_boundary_path(const Graph& g, const std::string& literal) {
    BoundaryPath x;
    auto bar = literal.find('|');
    if (bar != std::string::npos) {
        std::string pre = literal.substr(0, bar);
        std::string rest = literal.substr(bar + 1);
        // Accept "(c1,...,cp)^ω" and the ASCII fallback "^w".
        if (rest.size() < 3 || rest.front() != '(')
            throw ParseError("lasso literal must look like prefix|(cycle)^ω");
        auto close = rest.find(')');
        if (close == std::string::npos)
            throw ParseError("lasso literal must look like prefix|(cycle)^ω");
        std::string tail = rest.substr(close + 1);
        if (tail != "^ω" && tail != "^w")
            throw ParseError("lasso literal must end with ^ω");
        x.rep = canonical_lasso(split_csv(pre), split_csv(rest.substr(1, close - 1)));
    } else {
        auto es = split_csv(literal);
        if (es.size() == 1 && !g.find_group(es[0]) && g.has_vertex(es[0])) {
            x.rep = Path{es[0], {}};
        } else {
            Path p;
            p.edges = es;
            if (es.empty()) throw ParseError("empty path literal");
            const EdgeGroup* last = g.find_group(es.back());
            if (!last) throw ParseError("unknown edge " + es.back());
            p.base = last->dom;
            x.rep = std::move(p);
        }
    }
    auto bad = check_boundary_path(g, x);
    if (!bad.empty()) {
        std::ostringstream os;
        os << "invalid boundary path '" << literal << "':";
        for (const auto& s : bad) os << " [" << s << "]";
        throw ParseError(os.str());
    }
    return x;
}

}  // namespace topograph
