#pragma once

#include <string>
#include <utility>
#include <vector>

#include "topograph/graph.hpp"

namespace topograph {

/// Certificate for the unitality decision on a partially defined graph.
///
/// Write Ẽ for the completion of E by one point ∞ receiving every edge
/// outside dom(r). The algebra of E is unital exactly when ∞ is regular in
/// Ẽ, and on finitely presented graphs that reduces to three cardinal
/// tests, derived as follows:
///
///   ∞ lies in Ẽ⁰_fin iff some neighbourhood of ∞ has compact r̃-preimage.
///   Neighbourhoods of ∞ are complements of finite vertex sets C, and
///   r̃⁻¹(Ẽ⁰∖C) always contains E¹∖dom(r), so |E¹∖dom(r)| must be finite;
///   an ω-family whose ranges leave every finite C also lands in the
///   preimage for every choice of C, so no edges may escape to infinity.
///   (Defined ω-groups are captured by putting their finitely many target
///   vertices into C.)
///
///   ∞ avoids the closure of Ẽ⁰_sce iff only finitely many vertices are
///   never received, since in a discrete vertex space the closure of an
///   infinite set is the only way to reach ∞. And ∞ itself is received
///   as soon as dom(r) ≠ E¹.
///
/// Hence, for dom(r) ≠ E¹: unital ⟺ |E¹∖dom(r)| finite (and ≥ 1), no
/// escaping ranges, and finitely many never-received vertices. For total
/// r the classical criterion applies: unital ⟺ E⁰ compact, which holds
/// for every finitely presented vertex set.
struct InfinityReport {
    Cardinal undefined_edges;  // |E¹ ∖ dom(r)|
    Cardinal escaping;         // edges whose ranges leave every finite vertex set
    Cardinal never_received;   // |E⁰ ∖ r(dom r)|

    enum class Verdict { TotalRange, RegularAtInfinity, SingularAtInfinity };
    Verdict verdict = Verdict::TotalRange;
    bool unital = true;
    std::vector<std::string> reasons;  // which test fired, printable certificate
};

std::string verdict_name(InfinityReport::Verdict v);

InfinityReport classify_infinity(const Graph& g);

std::pair<bool, InfinityReport> is_unital(const Graph& g);

/// Independent route through condition "Y compact": Y glues the graph of r̃
/// with the singular vertices at ∞, and is compact iff the singular vertex
/// set is finite, no ranges escape every finite vertex set, and only
/// finitely many edges lie outside dom(r). Computed from raw cardinals,
/// not from classify_infinity's verdict. Requires dom(r) ≠ E¹.
bool check_y_compactness(const Graph& g);

}  // namespace topograph
