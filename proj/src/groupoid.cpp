#include "topograph/groupoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace topograph {

namespace {

// Longest common suffix of two edge words.
std::size_t common_suffix(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
    std::size_t t = 0;
    while (t < a.size() && t < b.size() && a[a.size() - 1 - t] == b[b.size() - 1 - t]) ++t;
    return t;
}

// σ^0 x, σ^1 x, ..., σ^{count-1} x for a lasso.
std::vector<BoundaryPath> shift_orbit(const BoundaryPath& x, std::size_t count) {
    std::vector<BoundaryPath> out;
    out.reserve(count);
    BoundaryPath cur = x;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(cur);
        cur = shift(cur);
    }
    return out;
}

}  // namespace

std::optional<TailWitness> tail_equivalent(const BoundaryPath& x, const BoundaryPath& y) {
    if (x.is_finite() != y.is_finite()) return std::nullopt;
    if (x.is_finite()) {
        const Path& p = x.finite();
        const Path& q = y.finite();
        if (p.base != q.base) return std::nullopt;  // shifts end at d(x) = d(y)
        auto t = static_cast<long long>(common_suffix(p.edges, q.edges));
        return TailWitness{p.length() - t, q.length() - t};
    }
    const Lasso& lx = x.lasso();
    const Lasso& ly = y.lasso();
    // Every witness reduces into [0, |prefix|+|cycle|) on each side, since
    // shifts are periodic with the cycle length once the prefix is consumed.
    std::size_t bx = lx.prefix.size() + lx.cycle.size();
    std::size_t by = ly.prefix.size() + ly.cycle.size();
    auto xs = shift_orbit(x, bx);
    auto ys = shift_orbit(y, by);
    std::optional<TailWitness> best;
    for (std::size_t m = 0; m < bx; ++m) {
        for (std::size_t n = 0; n < by; ++n) {
            if (!(xs[m] == ys[n])) continue;
            TailWitness w{static_cast<long long>(m), static_cast<long long>(n)};
            if (!best || w.m + w.n < best->m + best->n ||
                (w.m + w.n == best->m + best->n && w.m < best->m))
                best = w;
        }
    }
    return best;
}

GroupoidElement unit(const BoundaryPath& x) { return GroupoidElement{x, 0, x, 0, 0}; }

GroupoidElement element(const BoundaryPath& x, long long k, const BoundaryPath& y) {
    if (x.is_finite() != y.is_finite()) throw std::domain_error("element: not tail equivalent");
    if (x.is_finite()) {
        auto te = tail_equivalent(x, y);
        if (!te) throw std::domain_error("element: not tail equivalent");
        // For finite paths the tail lengths force a unique cocycle.
        long long only = x.finite().length() - y.finite().length();
        if (k != only) throw std::domain_error("element: cocycle not admissible");
        return GroupoidElement{x, k, y, te->m, te->n};
    }
    const Lasso& lx = x.lasso();
    const Lasso& ly = y.lasso();
    if (lx.cycle.size() != ly.cycle.size())  // equal tails share a primitive period
        throw std::domain_error("element: not tail equivalent");
    long long p = static_cast<long long>(lx.cycle.size());
    long long a = static_cast<long long>(lx.prefix.size());
    long long b = static_cast<long long>(ly.prefix.size());
    // Witnesses for fixed k are (m, m-k); the predicate is periodic with
    // period p once both sides are purely periodic.
    long long start = std::max(0LL, k);
    long long stop = std::max(a, b + k) + p;
    BoundaryPath xs = shift_pow(x, start);
    BoundaryPath ys = shift_pow(y, start - k);
    for (long long m = start; m <= stop; ++m) {
        if (xs == ys) return GroupoidElement{x, k, y, m, m - k};
        xs = shift(xs);
        ys = shift(ys);
    }
    if (!tail_equivalent(x, y)) throw std::domain_error("element: not tail equivalent");
    throw std::domain_error("element: cocycle not admissible");
}

GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b) {
    if (!(a.y == b.x)) throw std::domain_error("compose: non-composable");
    return element(a.x, a.k + b.k, b.y);
}

GroupoidElement inverse(const GroupoidElement& a) {
    return GroupoidElement{a.y, -a.k, a.x, a.n, a.m};
}

Isotropy isotropy(const BoundaryPath& x) {
    if (x.is_finite()) return Isotropy{0};
    return Isotropy{static_cast<long long>(x.lasso().cycle.size())};
}

std::vector<BoundaryPath> orbit(const Graph& g, const BoundaryPath& x, int bound) {
    std::vector<BoundaryPath> out;
    for (auto& y : boundary_finite(g, bound))
        if (tail_equivalent(x, y)) out.push_back(std::move(y));
    for (auto& y : lassos(g, bound, bound))
        if (tail_equivalent(x, y)) out.push_back(std::move(y));
    return out;
}

std::string to_string(const GroupoidElement& a) {
    return "(" + to_string(a.x) + ", " + std::to_string(a.k) + ", " + to_string(a.y) + ")";
}

}  // namespace topograph
