#include "topograph/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "topograph/dual.hpp"
#include "topograph/groupoid.hpp"
#include "topograph/ktheory.hpp"
#include "topograph/paths.hpp"
#include "topograph/textio.hpp"
#include "topograph/unital.hpp"

namespace topograph {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step over seed ^ index keeps distinct indices decorrelated.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t pick(std::mt19937_64& eng, std::uint64_t n) { return n ? eng() % n : 0; }

}  // namespace

Graph random_graph(const GenConfig& cfg, std::uint64_t index) {
    std::mt19937_64 eng(mix(cfg.seed, index));
    Graph g;
    int nv = 1 + static_cast<int>(pick(eng, std::max(cfg.max_vertices, 1)));
    for (int i = 0; i < nv; ++i) g.vertices.push_back("v" + std::to_string(i));

    bool want_cycle = pick(eng, 10) < 3;
    bool shield_source = pick(eng, 10) < 3 && nv >= 2;  // v0 receives nothing
    int range_lo = shield_source ? 1 : 0;

    int ne = static_cast<int>(pick(eng, std::max(cfg.max_edges, 0) + 1));
    if (want_cycle && ne == 0 && cfg.max_edges >= 1) ne = 1;
    int eid = 0;
    if (want_cycle && ne >= 1) {
        int w = range_lo + static_cast<int>(pick(eng, nv - range_lo));
        EdgeGroup e;
        e.id = "e" + std::to_string(eid++);
        e.dom = "v" + std::to_string(w);
        e.range = "v" + std::to_string(w);
        g.groups.push_back(std::move(e));
    }
    while (eid < ne) {
        EdgeGroup e;
        e.id = "e" + std::to_string(eid++);
        e.dom = "v" + std::to_string(pick(eng, nv));
        if (!(cfg.allow_partial && pick(eng, 10) < 3))
            e.range = "v" + std::to_string(range_lo + pick(eng, nv - range_lo));
        g.groups.push_back(std::move(e));
    }
    if (cfg.allow_omega && pick(eng, 4) == 0) {
        EdgeGroup e;
        e.id = "o0";
        e.multiplicity = Cardinal::omega();
        e.dom = "v" + std::to_string(pick(eng, nv));
        if (pick(eng, 2) == 0)
            e.range = "v" + std::to_string(range_lo + pick(eng, nv - range_lo));
        g.groups.push_back(std::move(e));
    }
    bool any_undefined = false;
    for (const auto& e : g.groups)
        if (!e.range) any_undefined = true;
    if (cfg.allow_partial && any_undefined && pick(eng, 10) == 0) g.escape = Escape::Omega;
    if (cfg.allow_relative && pick(eng, 2) == 0) {
        auto regular = classify(g).regular();
        std::set<VertexId> u;
        for (const auto& v : regular)
            if (pick(eng, 2) == 0) u.insert(v);
        g.relative = std::move(u);
    }
    g = canonicalized(std::move(g));
    require_valid(g);
    return g;
}

namespace {

std::size_t count_paths(const Graph& g, int n) { return enumerate_paths(g, n).size(); }

std::size_t count_singular_paths(const Graph& g, int n) {
    auto cls = classify(g);
    std::size_t out = 0;
    for (const auto& p : enumerate_paths(g, n))
        if (cls.is_singular(p.base)) ++out;
    return out;
}

bool dualizable(const Graph& g) { return g.total() && g.plain(); }

}  // namespace

CheckOutcome check_counting_identities(const Graph& g, int k, const Graph& ek) {
    if (!dualizable(g)) return CheckOutcome::skip("r partial or non-plain edges");
    std::size_t v_expect = count_paths(g, k);
    for (int j = 0; j < k; ++j) v_expect += count_singular_paths(g, j);
    std::size_t e_expect = count_paths(g, k + 1);
    for (int j = 1; j <= k; ++j) e_expect += count_singular_paths(g, j);
    if (ek.vertices.size() != v_expect)
        return CheckOutcome::fail("E_" + std::to_string(k) + " has " +
                                  std::to_string(ek.vertices.size()) + " vertices, expected " +
                                  std::to_string(v_expect));
    if (ek.groups.size() != e_expect)
        return CheckOutcome::fail("E_" + std::to_string(k) + " has " +
                                  std::to_string(ek.groups.size()) + " edges, expected " +
                                  std::to_string(e_expect));
    return CheckOutcome::pass();
}

CheckOutcome check_k_invariance(const Graph& g) {
    if (!dualizable(g)) return CheckOutcome::skip("r partial or non-plain edges");
    auto it = iterate(g, 2);
    KGroups base = k_groups(it.stages[0]);
    for (int k = 1; k <= 2; ++k) {
        KGroups kk = k_groups(it.stages[k]);
        if (!(kk == base))
            return CheckOutcome::fail("K of E_" + std::to_string(k) + " is (" + kk.k0.str() +
                                      ", " + kk.k1.str() + "), base is (" + base.k0.str() + ", " +
                                      base.k1.str() + ")");
    }
    return CheckOutcome::pass();
}

CheckOutcome check_relative_k_invariance(const Graph& g, const std::set<VertexId>& u) {
    if (!dualizable(g)) return CheckOutcome::skip("r partial or non-plain edges");
    KGroups lhs = k_groups(g, u);
    KGroups rhs = k_groups(relative_dual(g, u).graph);
    if (!(lhs == rhs))
        return CheckOutcome::fail("K(E;U) = (" + lhs.k0.str() + ", " + lhs.k1.str() +
                                  ") but K(E_U) = (" + rhs.k0.str() + ", " + rhs.k1.str() + ")");
    return CheckOutcome::pass();
}

CheckOutcome check_factor_maps(const Graph& g, int k) {
    if (!dualizable(g)) return CheckOutcome::skip("r partial or non-plain edges");
    auto it = iterate(g, k);
    for (int j = 0; j < k; ++j) {
        auto bad = check_factor_map(it.steps[j], it.stages[j + 1], it.stages[j]);
        if (!bad.empty())
            return CheckOutcome::fail("m_{" + std::to_string(j) + "," + std::to_string(j + 1) +
                                      "}: " + bad.front());
    }
    // Composites m_{k,l} down to the base.
    for (int lo = 0; lo < k; ++lo) {
        FactorMap m = identity_factor_map(it.stages[lo]);
        for (int j = lo; j < k; ++j) m = compose_factor_maps(m, it.steps[j]);
        auto bad = check_factor_map(m, it.stages[k], it.stages[lo]);
        if (!bad.empty())
            return CheckOutcome::fail("m_{" + std::to_string(lo) + "," + std::to_string(k) +
                                      "}: " + bad.front());
    }
    return CheckOutcome::pass();
}

CheckOutcome check_sgds_fixed_point(const Graph& g) {
    if (!dualizable(g)) return CheckOutcome::skip("r partial or non-plain edges");
    if (!is_sgds(g)) return CheckOutcome::skip("not an SGDS");
    DualResult dr = dual(g);
    if (!isomorphic(g, dr.graph)) return CheckOutcome::fail("dual of an SGDS not isomorphic to it");
    auto bad = check_factor_map(dr.to_base, dr.graph, g);
    if (!bad.empty()) return CheckOutcome::fail("m1: " + bad.front());
    return CheckOutcome::pass();
}

CheckOutcome check_boundary_bijection(const Graph& g, int k) {
    if (!dualizable(g)) return CheckOutcome::skip("r partial or non-plain edges");
    std::set<std::string> lhs;
    for (const auto& x : boundary_finite(g, k)) lhs.insert(truncate_name(g, x, k));
    for (const auto& p : enumerate_paths(g, k)) {
        std::vector<std::string> coords(p.edges.begin(), p.edges.end());
        lhs.insert(product_tuple_name(path_range(g, p), coords, k));
    }
    auto prod = iterate_product(g, k);
    std::set<std::string> rhs(prod.graph.vertices.begin(), prod.graph.vertices.end());
    if (lhs != rhs) {
        for (const auto& s : lhs)
            if (!rhs.count(s)) return CheckOutcome::fail("truncation " + s + " missing from E_k0");
        for (const auto& s : rhs)
            if (!lhs.count(s)) return CheckOutcome::fail("E_k0 element " + s + " not a truncation");
    }
    return CheckOutcome::pass();
}

namespace {

std::vector<BoundaryPath> bounded_units(const Graph& g, int bound) {
    std::vector<BoundaryPath> units = boundary_finite(g, bound);
    for (auto& l : lassos(g, bound, bound)) units.push_back(std::move(l));
    return units;
}

}  // namespace

CheckOutcome check_groupoid_axioms(const Graph& g, int bound, std::size_t max_units) {
    if (!dualizable(g)) return CheckOutcome::skip("r partial or non-plain edges");
    auto units = bounded_units(g, bound);
    if (units.size() > max_units)
        return CheckOutcome::skip("unit set too large (" + std::to_string(units.size()) + ")");

    // Elements between every equivalent unit pair; for lasso tails also the
    // cocycles one isotropy period away.
    std::vector<GroupoidElement> elems;
    for (const auto& x : units) {
        for (const auto& y : units) {
            auto te = tail_equivalent(x, y);
            if (!te) continue;
            long long k0 = te->m - te->n;
            std::vector<long long> ks{k0};
            if (!x.is_finite()) {
                long long p = isotropy(x).period;
                ks.push_back(k0 + p);
                ks.push_back(k0 - p);
            }
            for (long long k : ks) elems.push_back(element(x, k, y));
        }
    }
    // Dense orbits make the associativity stage cubic; keep the suite exact
    // but desk-scale by skipping oversized element sets.
    if (elems.size() > 600)
        return CheckOutcome::skip("element set too large (" + std::to_string(elems.size()) + ")");
    for (const auto& a : elems) {
        if (!(compose(unit(a.x), a) == a)) return CheckOutcome::fail("left unit law fails");
        if (!(compose(a, unit(a.y)) == a)) return CheckOutcome::fail("right unit law fails");
        if (!(compose(a, inverse(a)) == unit(a.x)))
            return CheckOutcome::fail("a · a⁻¹ is not the unit at a.x");
        if (!(compose(inverse(a), a) == unit(a.y)))
            return CheckOutcome::fail("a⁻¹ · a is not the unit at a.y");
        if (!(inverse(inverse(a)) == a)) return CheckOutcome::fail("inverse not involutive");
    }
    // Cocycle additivity and associativity over composable pairs/triples.
    std::map<BoundaryPath, std::vector<const GroupoidElement*>> by_source;
    for (const auto& a : elems) by_source[a.x].push_back(&a);
    for (const auto& a : elems) {
        auto it = by_source.find(a.y);
        if (it == by_source.end()) continue;
        for (const GroupoidElement* b : it->second) {
            GroupoidElement ab = compose(a, *b);
            if (ab.k != a.k + b->k) return CheckOutcome::fail("cocycle not additive");
            auto jt = by_source.find(b->y);
            if (jt == by_source.end()) continue;
            for (const GroupoidElement* c : jt->second) {
                if (!(compose(ab, *c) == compose(a, compose(*b, *c))))
                    return CheckOutcome::fail("associativity fails");
            }
        }
    }
    return CheckOutcome::pass();
}

CheckOutcome check_isotropy_lattice(const Graph& g, int bound, std::size_t max_units) {
    if (!dualizable(g)) return CheckOutcome::skip("r partial or non-plain edges");
    auto units = bounded_units(g, bound);
    if (units.size() > max_units)
        return CheckOutcome::skip("unit set too large (" + std::to_string(units.size()) + ")");
    for (const auto& x : units) {
        Isotropy iso = isotropy(x);
        for (long long k = -6; k <= 6; ++k) {
            bool exists = true;
            try {
                element(x, k, x);
            } catch (const std::domain_error&) {
                exists = false;
            }
            if (exists != iso.contains(k))
                return CheckOutcome::fail("isotropy of " + to_string(x) + " wrong at k = " +
                                          std::to_string(k));
        }
    }
    return CheckOutcome::pass();
}

CheckOutcome check_unitality_chain(const Graph& g) {
    if (g.total()) return CheckOutcome::skip("r total");
    auto [unital, report] = is_unital(g);
    bool y_compact = check_y_compactness(g);
    bool regular_at_inf = report.verdict == InfinityReport::Verdict::RegularAtInfinity;
    if (unital != y_compact || unital != regular_at_inf)
        return CheckOutcome::fail(std::string("chain broken: unital=") + (unital ? "1" : "0") +
                                  " Ycompact=" + (y_compact ? "1" : "0") +
                                  " regular∞=" + (regular_at_inf ? "1" : "0"));
    return CheckOutcome::pass();
}

CheckOutcome check_snf_certificate(const Graph& g) {
    IntMatrix m = build_map(g, g.relative ? std::optional(*g.relative) : std::nullopt);
    SmithDecomposition snf = smith_normal_form(m.a);
    if (!mat_equal(mat_mul(mat_mul(snf.p, m.a), snf.q), snf.d))
        return CheckOutcome::fail("P·M·Q ≠ D");
    if (!determinant(snf.p).is_unit()) return CheckOutcome::fail("P not unimodular");
    if (!determinant(snf.q).is_unit()) return CheckOutcome::fail("Q not unimodular");
    for (std::size_t i = 0; i + 1 < snf.invariant_factors.size(); ++i)
        if (!(snf.invariant_factors[i + 1] % snf.invariant_factors[i]).is_zero())
            return CheckOutcome::fail("divisibility chain broken");
    return CheckOutcome::pass();
}

bool CaseReport::passed() const {
    for (const auto& [name, o] : checks)
        if (o.failed()) return false;
    return true;
}

std::uint64_t SuiteReport::failures() const {
    std::uint64_t out = 0;
    for (const auto& c : case_reports)
        if (!c.passed()) ++out;
    return out;
}

std::string SuiteReport::render() const {
    std::ostringstream os;
    os << "suite seed=" << cfg.seed << " cases=" << cases << " maxV=" << cfg.max_vertices
       << " maxE=" << cfg.max_edges << " partial=" << cfg.allow_partial
       << " omega=" << cfg.allow_omega << " relative=" << cfg.allow_relative << "\n";
    for (const auto& c : case_reports) {
        if (c.passed()) {
            os << "case " << c.index << ": pass\n";
            continue;
        }
        os << "case " << c.index << ": FAIL\n";
        for (const auto& [name, o] : c.checks)
            if (o.failed()) os << "  " << name << ": " << o.detail << "\n";
        os << "  offending graph:\n";
        std::istringstream gs(c.graph_text);
        std::string line;
        while (std::getline(gs, line)) os << "    " << line << "\n";
    }
    os << "result: " << (cases - failures()) << "/" << cases << " passed";
    if (failures()) os << ", " << failures() << " failed";
    os << "\n";
    return os.str();
}

SuiteReport run_suite(const GenConfig& cfg, std::uint64_t cases) {
    SuiteReport out;
    out.cfg = cfg;
    out.cases = cases;
    for (std::uint64_t i = 0; i < cases; ++i) {
        Graph g = random_graph(cfg, i);
        CaseReport cr;
        cr.index = i;
        cr.graph_text = print_graph(g);
        // Deterministic relative subset when none is declared: every other
        // regular vertex.
        std::set<VertexId> u;
        if (g.relative) {
            u = *g.relative;
        } else {
            int idx = 0;
            for (const auto& v : classify(g).regular())
                if (idx++ % 2 == 0) u.insert(v);
        }
        auto add = [&](const std::string& name, CheckOutcome o) {
            cr.checks.emplace_back(name, std::move(o));
        };
        add("k-invariance", check_k_invariance(g));
        add("relative-k-invariance", check_relative_k_invariance(g, u));
        if (dualizable(g)) {
            auto it = iterate(g, 3);
            for (int k = 1; k <= 3; ++k)
                add("counting-k" + std::to_string(k),
                    check_counting_identities(g, k, it.stages[k]));
        } else {
            add("counting", CheckOutcome::skip("r partial or non-plain edges"));
        }
        add("factor-maps", check_factor_maps(g, 2));
        add("sgds-fixed-point", check_sgds_fixed_point(g));
        add("boundary-bijection", check_boundary_bijection(g, 2));
        add("groupoid-axioms", check_groupoid_axioms(g, 3));
        add("isotropy-lattice", check_isotropy_lattice(g, 3));
        add("unitality-chain", check_unitality_chain(g));
        add("snf-certificate", check_snf_certificate(g));
        out.case_reports.push_back(std::move(cr));
    }
    return out;
}

}  // namespace topograph
