#pragma once

#include <optional>
#include <vector>

#include "topograph/paths.hpp"

namespace topograph {

/// Witness pair: σ^m x = σ^n y.
struct TailWitness {
    long long m = 0;
    long long n = 0;

    bool operator==(const TailWitness&) const = default;
};

/// Minimal witnesses for tail equivalence, or nullopt when the two boundary
/// paths are not tail equivalent. Minimality: smallest m+n, then smallest m;
/// for a fixed cocycle the witness pair is the componentwise minimum.
std::optional<TailWitness> tail_equivalent(const BoundaryPath& x, const BoundaryPath& y);

/// Element (x, k, y) of the shift groupoid over the boundary path space:
/// k = m − n for witnesses σ^m x = σ^n y, stored with the minimal witness
/// pair for its cocycle. Units are (x, 0, x) with witnesses (0, 0).
struct GroupoidElement {
    BoundaryPath x;
    long long k = 0;
    BoundaryPath y;
    long long m = 0;
    long long n = 0;

    bool operator==(const GroupoidElement&) const = default;
};

GroupoidElement unit(const BoundaryPath& x);

/// Builds (x, k, y) with minimal witnesses; throws "not tail equivalent"
/// or "cocycle not admissible".
GroupoidElement element(const BoundaryPath& x, long long k, const BoundaryPath& y);

/// (x, k1, y)·(y, k2, z) = (x, k1+k2, z), witnesses recomputed minimal;
/// throws "non-composable" when a.y ≠ b.x.
GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b);

GroupoidElement inverse(const GroupoidElement& a);

/// Isotropy subgroup of ℤ at a unit: trivial for finite boundary paths,
/// pℤ for a lasso with primitive cycle length p.
struct Isotropy {
    long long period = 0;  // 0 encodes the trivial group {0}

    bool trivial() const { return period == 0; }
    bool contains(long long k) const { return period == 0 ? k == 0 : k % period == 0; }
    bool operator==(const Isotropy&) const = default;
};

Isotropy isotropy(const BoundaryPath& x);

/// All boundary paths within representation bounds (finite length ≤ bound,
/// lasso prefix and cycle ≤ bound) tail equivalent to x.
std::vector<BoundaryPath> orbit(const Graph& g, const BoundaryPath& x, int bound);

std::string to_string(const GroupoidElement& a);

}  // namespace topograph
