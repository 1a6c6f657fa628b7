#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "topograph/cardinal.hpp"

namespace topograph {

using VertexId = std::string;
using EdgeId = std::string;

/// A bundle of parallel edges sharing one domain vertex and one (or no)
/// range vertex. A plain edge is a group of multiplicity 1; an `omega`
/// group stands for countably many parallel edges. A missing range means
/// the edge lies outside dom(r).
struct EdgeGroup {
    EdgeId id;
    Cardinal multiplicity = Cardinal::finite(1);
    VertexId dom;
    std::optional<VertexId> range;

    bool operator==(const EdgeGroup&) const = default;
};

enum class Escape { None, Omega };

/// Finitely presented discrete topological graph, optionally with a partial
/// range map, a relative vertex subset U, and a symbolic escape flag for
/// graphs standing in for infinite families whose ranges leave every finite
/// vertex set.
struct Graph {
    std::vector<VertexId> vertices;
    std::vector<EdgeGroup> groups;
    std::optional<std::set<VertexId>> relative;
    Escape escape = Escape::None;

    bool has_vertex(const VertexId& v) const;
    const EdgeGroup* find_group(const EdgeId& e) const;

    /// Every range defined.
    bool total() const;
    /// Every group has multiplicity 1 (edges are individuals).
    bool plain() const;
    /// No ω-multiplicity groups.
    bool finite_presented() const;

    bool operator==(const Graph&) const = default;
};

/// Sorted vertex and group lists; canonical printing order.
Graph canonicalized(Graph g);

enum class VertexClass { Regular, SingularSource, SingularInfiniteReceiver };

std::string vertex_class_name(VertexClass c);

/// Partition of the vertex set into regular and singular vertices, with the
/// receiver cardinal |r^{-1}(v)| (defined ranges only) that decides it.
struct VertexClassification {
    std::map<VertexId, Cardinal> receiver;
    std::map<VertexId, VertexClass> cls;

    bool is_regular(const VertexId& v) const { return cls.at(v) == VertexClass::Regular; }
    bool is_singular(const VertexId& v) const { return !is_regular(v); }
    std::set<VertexId> regular() const;
    std::set<VertexId> singular() const;
};

/// Structural checks: dangling or duplicate ids, ill-formed id tokens,
/// relative set outside the regular vertices, illegal escape flag.
/// Violations are data; an empty list means the graph is well formed.
std::vector<std::string> validate(const Graph& g);

/// Throws std::invalid_argument listing the violations when validate fails.
void require_valid(const Graph& g);

/// Regular/singular vertex calculus. On discrete graphs a vertex is regular
/// iff it receives at least one and finitely many edges under the defined
/// part of r.
VertexClassification classify(const Graph& g);

/// True iff r is injective on the edge set, i.e. the graph arises from a
/// singly generated dynamical system. Requires a total range map.
bool is_sgds(const Graph& g);

struct Completion {
    Graph graph;
    VertexId infinity_vertex;
};

/// One-point completion: adds a fresh vertex and redirects every undefined
/// range to it, producing a total graph. Rejects ω-groups.
Completion tilde_completion(const Graph& g);

/// Restriction of a total graph to a vertex subset containing every edge
/// domain; ranges falling outside the subset become undefined.
Graph restrict_to(const Graph& f, const std::set<VertexId>& e0);

}  // namespace topograph
