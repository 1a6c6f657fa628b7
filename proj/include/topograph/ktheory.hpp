#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "topograph/bigint.hpp"
#include "topograph/graph.hpp"

namespace topograph {

using Mat = std::vector<std::vector<BigInt>>;

Mat mat_identity(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
bool mat_equal(const Mat& a, const Mat& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const Mat& m);

/// The K-theory map ι∗ − [π_r]: rows indexed by all vertices, columns by a
/// subset U of the regular vertices. The column of v is δ_v − Σ δ_{d(e)}
/// over the edges e with r(e) = v, counted with multiplicity.
struct IntMatrix {
    std::vector<VertexId> row_ids;
    std::vector<VertexId> col_ids;
    Mat a;
};

/// U defaults to the full regular vertex set. ω-groups never target regular
/// vertices, so they contribute no entries; undefined ranges are ignored.
IntMatrix build_map(const Graph& g, const std::optional<std::set<VertexId>>& u = std::nullopt);

/// P·M·Q = D with P, Q unimodular and D diagonal with d1 | d2 | ... .
struct SmithDecomposition {
    Mat p, d, q;
    std::vector<BigInt> invariant_factors;  // nonzero diagonal entries
    std::size_t rank = 0;
};

SmithDecomposition smith_normal_form(const Mat& m);

/// Finitely generated abelian group in canonical form: free rank plus the
/// invariant factors ≥ 2 in a divisibility chain.
struct AbelianGroup {
    long long free_rank = 0;
    std::vector<BigInt> torsion;

    bool operator==(const AbelianGroup&) const = default;
    std::string str() const;  // "0", "Z", "Z^2 (+) Z/2 (+) Z/6", ...
};

bool groups_equal(const AbelianGroup& a, const AbelianGroup& b);

struct KGroups {
    AbelianGroup k0;  // cokernel of the map
    AbelianGroup k1;  // kernel (free)

    bool operator==(const KGroups&) const = default;
};

/// K-groups of the (relative) graph algebra through the six-term sequence,
/// which collapses to kernel and cokernel of one integer matrix because the
/// coefficient algebras of discrete vertex spaces have trivial K1:
/// K0 = Z^rows/im, K1 = ker ⊂ Z^cols. U = ∅ gives the Toeplitz algebra.
KGroups k_groups(const Graph& g, const std::optional<std::set<VertexId>>& u = std::nullopt);

}  // namespace topograph
