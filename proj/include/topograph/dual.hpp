#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "topograph/graph.hpp"

namespace topograph {

/// Vertex/edge projection of a dual onto its base graph: the first
/// coordinate of each minted pair name. Lifting is against `d`.
struct FactorMap {
    std::map<VertexId, VertexId> vertex_map;
    std::map<EdgeId, EdgeId> edge_map;

    bool operator==(const FactorMap&) const = default;
};

/// outer ∘ inner: inner maps A → B, outer maps B → C.
FactorMap compose_factor_maps(const FactorMap& outer, const FactorMap& inner);

FactorMap identity_factor_map(const Graph& g);

struct DualResult {
    Graph graph;
    FactorMap to_base;
};

/// Dual graph: one vertex "(r(e),e)" per edge e plus one "(v,∞)" per
/// singular v; one edge "(e',e)" per composable pair d(e') = r(e) plus one
/// "(e',∞)" per edge with singular domain. d maps "(e',e)" to "(d(e'),e)"
/// and r maps it to "(r(e'),e')". Requires a total graph with plain edges.
DualResult dual(const Graph& g);

/// Relative dual with respect to U ⊆ regular vertices: E⁰∖U plays the role
/// of the singular set. relative_dual(g, regular set) coincides with dual(g).
DualResult relative_dual(const Graph& g, const std::set<VertexId>& u);

struct IterateResult {
    std::vector<Graph> stages;     // E_0 .. E_k
    std::vector<FactorMap> steps;  // steps[j] : E_{j+1} → E_j
    FactorMap to_base;             // composite E_k → E_0
};

/// k-fold dual by repeated application; stage names nest parentheses.
IterateResult iterate(const Graph& g, int k);

/// The same graph built directly from flat tuples (v,e1,...,ek) with
/// ∞-padding; isomorphic to iterate(g,k).stages.back() but named flat.
DualResult iterate_product(const Graph& g, int k);

/// Minted flat tuple name "(head,c1,...,ck)", ∞-padded up to pad_to coords.
std::string product_tuple_name(const std::string& head, const std::vector<std::string>& coords,
                               int pad_to);

/// Factor-map axioms: totality of both components, commuting squares with
/// d and r, unique d-lifting, surjectivity of the vertex component, and
/// regularity (preimages of regular vertices are regular). When
/// `relative_to` is given, regularity is checked against that subset of the
/// target instead of its full regular set. Violations are data.
std::vector<std::string> check_factor_map(
    const FactorMap& m, const Graph& source, const Graph& target,
    const std::optional<std::set<VertexId>>& relative_to = std::nullopt);

struct GraphIsomorphism {
    std::map<VertexId, VertexId> vertex_map;
    std::map<EdgeId, EdgeId> edge_map;
};

/// Backtracking isomorphism search with degree-signature pruning;
/// deterministic search order, intended for small graphs. Partial graphs
/// are compared with undefined ranges matching undefined ranges.
std::optional<GraphIsomorphism> isomorphic(const Graph& a, const Graph& b);

}  // namespace topograph
