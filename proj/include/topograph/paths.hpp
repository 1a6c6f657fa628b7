#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "topograph/graph.hpp"

namespace topograph {

/// Paths compose right to left: (e1,...,en) is a path when d(e_k) = r(e_{k+1}).
/// The range of the path is r(e1), its domain d(en). `base` caches the
/// domain vertex, which is the vertex itself for the empty path.
struct Path {
    VertexId base;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const Path&) const = default;
    bool operator<(const Path& o) const {
        if (edges.size() != o.edges.size()) return edges.size() < o.edges.size();
        if (edges != o.edges) return edges < o.edges;
        return base < o.base;
    }
};

/// Eventually periodic infinite path prefix·cycle·cycle·..., in canonical
/// form: the cycle is primitive and the prefix is the shortest possible
/// (its last edge differs from the cycle's last edge). The canonical form
/// of an eventually periodic one-sided sequence is unique.
struct Lasso {
    std::vector<EdgeId> prefix;
    std::vector<EdgeId> cycle;

    bool operator==(const Lasso&) const = default;
    bool operator<(const Lasso& o) const {
        if (prefix.size() != o.prefix.size()) return prefix.size() < o.prefix.size();
        if (cycle.size() != o.cycle.size()) return cycle.size() < o.cycle.size();
        if (prefix != o.prefix) return prefix < o.prefix;
        return cycle < o.cycle;
    }
};

/// A point of the boundary path space: a finite path ending at a singular
/// vertex, or an eventually periodic infinite path.
struct BoundaryPath {
    std::variant<Path, Lasso> rep;

    bool is_finite() const { return std::holds_alternative<Path>(rep); }
    const Path& finite() const { return std::get<Path>(rep); }
    const Lasso& lasso() const { return std::get<Lasso>(rep); }

    /// Number of leading edges; std::nullopt for the (infinite) lassos.
    std::optional<int> length() const {
        if (is_finite()) return finite().length();
        return std::nullopt;
    }

    bool operator==(const BoundaryPath&) const = default;
    bool operator<(const BoundaryPath& o) const {
        if (is_finite() != o.is_finite()) return is_finite();
        if (is_finite()) return finite() < o.finite();
        return lasso() < o.lasso();
    }
};

/// Range vertex r(e1) of a path; the base vertex for the empty path.
VertexId path_range(const Graph& g, const Path& p);
VertexId range_vertex(const Graph& g, const BoundaryPath& x);

/// All paths of length n; the vertex list (as empty paths) for n = 0.
std::vector<Path> enumerate_paths(const Graph& g, int n);

/// All finite boundary paths of length ≤ max_len: paths whose domain vertex
/// is singular, including length-0 singular vertices.
std::vector<BoundaryPath> boundary_finite(const Graph& g, int max_len);

/// All canonical lassos with prefix length ≤ max_prefix and primitive cycle
/// length ≤ max_cycle; exactly the eventually periodic infinite paths
/// within bounds, without duplicates.
std::vector<BoundaryPath> lassos(const Graph& g, int max_prefix, int max_cycle);

/// Unique canonical form: primitive cycle, shortest prefix.
Lasso canonical_lasso(std::vector<EdgeId> prefix, std::vector<EdgeId> cycle);

/// Left shift σ: drops the first edge. Defined on boundary paths of length
/// ≥ 1 and on every lasso; throws on length-0 paths ("not in dom(σ)").
BoundaryPath shift(const BoundaryPath& x);

/// σ^m; throws when m exceeds a finite path's length.
BoundaryPath shift_pow(const BoundaryPath& x, long long m);

/// Truncation to a product-form dual-vertex tuple: r(x) followed by the
/// first k edges, ∞-padded once the path is exhausted.
std::vector<std::string> truncate(const Graph& g, const BoundaryPath& x, int k);

inline const std::string kInfinityMark = "∞";

/// Flat minted name "(v,e1,...,ek)" of truncate(g, x, k).
std::string truncate_name(const Graph& g, const BoundaryPath& x, int k);

/// Printing: a length-0 path prints its vertex, longer paths their comma
/// separated edges; lassos print as "prefix|(cycle)^ω".
std::string to_string(const Path& p);
std::string to_string(const BoundaryPath& x);

/// Inverse of to_string against a fixed graph (needed to resolve whether a
/// bare token names a vertex or an edge). Validates composability and the
/// singular-end condition.
BoundaryPath parse_boundary_path(const Graph& g, const std::string& literal);

/// Checks composability and (for finite paths) the singular domain vertex;
/// returns violations, empty when x is a valid boundary path of g.
std::vector<std::string> check_boundary_path(const Graph& g, const BoundaryPath& x);

}  // namespace topograph
