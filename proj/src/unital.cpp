#include "topograph/unital.hpp"

#include <stdexcept>

namespace topograph {

std::string verdict_name(InfinityReport::Verdict v) {
    switch (v) {
        case InfinityReport::Verdict::TotalRange: return "TotalRange";
        case InfinityReport::Verdict::RegularAtInfinity: return "RegularAtInfinity";
        case InfinityReport::Verdict::SingularAtInfinity: return "SingularAtInfinity";
    }
    return "?";
}

InfinityReport classify_infinity(const Graph& g) {
    require_valid(g);
    InfinityReport out;
    out.undefined_edges = Cardinal::finite(0);
    for (const auto& e : g.groups)
        if (!e.range) out.undefined_edges = out.undefined_edges + e.multiplicity;
    out.escaping = g.escape == Escape::Omega ? Cardinal::omega() : Cardinal::finite(0);
    auto cls = classify(g);
    std::uint64_t sources = 0;
    for (const auto& [v, rc] : cls.receiver)
        if (rc == Cardinal::finite(0)) ++sources;
    out.never_received = Cardinal::finite(sources);

    using V = InfinityReport::Verdict;
    if (out.undefined_edges == Cardinal::finite(0)) {
        out.verdict = V::TotalRange;
        out.unital = true;  // finitely presented vertex set is compact
        out.reasons = {"r total, E0 compact"};
    } else if (out.undefined_edges.is_finite() && out.escaping.is_finite() &&
               out.never_received.is_finite()) {
        out.verdict = V::RegularAtInfinity;
        out.unital = true;
        out.reasons = {"∞ regular in the completion"};
    } else {
        out.verdict = V::SingularAtInfinity;
        out.unital = false;
        if (out.undefined_edges.is_omega()) out.reasons.push_back("E1∖dom(r) infinite");
        if (out.escaping.is_omega()) out.reasons.push_back("ranges escape to infinity");
        if (out.never_received.is_omega())
            out.reasons.push_back("infinitely many never-received vertices");
    }
    return out;
}

std::pair<bool, InfinityReport> is_unital(const Graph& g) {
    InfinityReport r = classify_infinity(g);
    return {r.unital, r};
}

bool check_y_compactness(const Graph& g) {
    require_valid(g);
    if (g.total())
        throw std::domain_error("check_y_compactness: dom(r) = E1; criterion needs a partial r");
    auto cls = classify(g);
    std::uint64_t singular = 0;
    for (const auto& [v, c] : cls.cls)
        if (c != VertexClass::Regular) ++singular;
    Cardinal sg = Cardinal::finite(singular);
    Cardinal undefined = Cardinal::finite(0);
    for (const auto& e : g.groups)
        if (!e.range) undefined = undefined + e.multiplicity;
    Cardinal escaping = g.escape == Escape::Omega ? Cardinal::omega() : Cardinal::finite(0);
    return sg.is_finite() && escaping.is_finite() && undefined.is_finite();
}

}  // namespace topograph
