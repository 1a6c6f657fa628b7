#include <doctest.h>

#include <set>

#include "topograph/dual.hpp"
#include "topograph/paths.hpp"
#include "topograph/textio.hpp"
#include "topograph/verify.hpp"

using namespace topograph;

namespace {

Graph single_edge() { return parse_graph("vertex u\nvertex w\nedge e u w\n"); }
Graph single_loop() { return parse_graph("vertex v\nedge e v v\n"); }
Graph two_cycle() { return parse_graph("vertex a\nvertex b\nedge e a b\nedge f b a\n"); }

}  // namespace

TEST_CASE("path enumeration") {
    CHECK(enumerate_paths(single_edge(), 1).size() == 1);
    CHECK(enumerate_paths(single_edge(), 2).empty());  // d(e) = u never equals r(e) = w
    for (int n = 0; n < 5; ++n)
        CHECK(enumerate_paths(single_loop(), n).size() == 1);
    auto verts = enumerate_paths(single_edge(), 0);
    CHECK(verts.size() == 2);
    CHECK(verts[0].edges.empty());
}

TEST_CASE("finite boundary paths of the single edge") {
    auto out = boundary_finite(single_edge(), 2);
    REQUIRE(out.size() == 2);
    CHECK(to_string(out[0]) == "u");
    CHECK(to_string(out[1]) == "e");
}

TEST_CASE("the loop has no finite boundary paths and exactly one lasso") {
    CHECK(boundary_finite(single_loop(), 4).empty());
    auto ls = lassos(single_loop(), 3, 3);
    REQUIRE(ls.size() == 1);
    CHECK(to_string(ls[0]) == "|(e)^ω");
}

TEST_CASE("boundary paths of the completed partial graph") {
    Graph e71 = parse_graph("vertex v\nvertex w\nedge e v w\nedge f w ?\n");
    auto comp = tilde_completion(e71);
    auto cls = classify(comp.graph);
    CHECK(cls.is_singular("v"));
    // The added point receives the redirected edge, so it is regular here.
    CHECK(cls.is_regular(comp.infinity_vertex));
    auto out = boundary_finite(comp.graph, 3);
    std::set<std::string> names;
    for (const auto& x : out) names.insert(to_string(x));
    CHECK(names == std::set<std::string>{"v", "e", "f,e"});
}

TEST_CASE("a graph without cycles has no lassos") {
    CHECK(lassos(single_edge(), 3, 3).empty());
}

TEST_CASE("the two-cycle has two rotations as lassos") {
    auto ls = lassos(two_cycle(), 0, 2);
    REQUIRE(ls.size() == 2);
    std::set<std::string> names{to_string(ls[0]), to_string(ls[1])};
    CHECK(names == std::set<std::string>{"|(e,f)^ω", "|(f,e)^ω"});
}

TEST_CASE("canonical lassos are primitive with shortest prefix") {
    Lasso l = canonical_lasso({}, {"e", "e"});
    CHECK(l.cycle == std::vector<EdgeId>{"e"});
    // Prefix ending in the cycle's last edge is absorbed by rotation.
    Lasso m = canonical_lasso({"f"}, {"e", "f"});
    CHECK(m.prefix.empty());
    CHECK(m.cycle == std::vector<EdgeId>{"f", "e"});
    // Idempotent.
    Lasso again = canonical_lasso(m.prefix, m.cycle);
    CHECK(again == m);
}

TEST_CASE("shift") {
    Graph g = single_edge();
    BoundaryPath p{Path{"u", {"e"}}};
    BoundaryPath u = shift(p);
    CHECK(to_string(u) == "u");
    CHECK_THROWS_WITH_AS(shift(u), doctest::Contains("dom(σ)"), std::domain_error);

    BoundaryPath z{Lasso{{}, {"e"}}};
    CHECK(shift(z) == z);
}

TEST_CASE("shift drops a prefix edge and rotates cycles") {
    // prefix (e), cycle (f,g): shifting removes the prefix.
    BoundaryPath x{Lasso{{"e"}, {"f", "g"}}};
    BoundaryPath y = shift(x);
    CHECK(y == BoundaryPath{Lasso{{}, {"f", "g"}}});
    CHECK(shift(y) == BoundaryPath{Lasso{{}, {"g", "f"}}});
}

TEST_CASE("shift keeps lassos canonical") {
    GenConfig cfg;
    cfg.seed = 13;
    for (std::uint64_t i = 0; i < 20; ++i) {
        Graph g = random_graph(cfg, i);
        for (const auto& x : lassos(g, 2, 3)) {
            BoundaryPath y = shift(x);
            const Lasso& l = y.lasso();
            CHECK(canonical_lasso(l.prefix, l.cycle) == l);
            CHECK(check_boundary_path(g, y).empty());
        }
    }
}

TEST_CASE("truncation pads with the infinity mark") {
    Graph g = single_edge();
    BoundaryPath u{Path{"u", {}}};
    CHECK(truncate(g, u, 2) == std::vector<std::string>{"u", "∞", "∞"});
    BoundaryPath e{Path{"u", {"e"}}};
    CHECK(truncate(g, e, 2) == std::vector<std::string>{"w", "e", "∞"});
    BoundaryPath z{Lasso{{}, {"e"}}};
    CHECK(truncate(single_loop(), z, 3) == std::vector<std::string>{"v", "e", "e", "e"});
}

TEST_CASE("truncation after a shift agrees with shifting the truncation") {
    GenConfig cfg;
    cfg.seed = 17;
    for (std::uint64_t i = 0; i < 15; ++i) {
        Graph g = random_graph(cfg, i);
        std::vector<BoundaryPath> xs = boundary_finite(g, 3);
        for (auto& l : lassos(g, 2, 3)) xs.push_back(l);
        for (const auto& x : xs) {
            if (x.is_finite() && x.finite().edges.empty()) continue;
            auto full = truncate(g, x, 3);
            auto shifted = truncate(g, shift(x), 2);
            // Dropping r(x) and the first edge, the remaining coordinates agree.
            CHECK(shifted[1] == full[2]);
            CHECK(shifted[2] == full[3]);
            // The new head is d of the dropped edge.
            const EdgeId& dropped = full[1];
            CHECK(shifted[0] == g.find_group(dropped)->dom);
        }
    }
}

TEST_CASE("boundary and lasso counts match a brute-force enumeration") {
    GenConfig cfg;
    cfg.seed = 19;
    for (std::uint64_t i = 0; i < 15; ++i) {
        Graph g = random_graph(cfg, i);
        auto cls = classify(g);
        // Brute force: all composable words up to the bound, singular ends.
        std::size_t finite_expected = 0;
        for (int n = 0; n <= 3; ++n)
            for (const auto& p : enumerate_paths(g, n))
                if (cls.is_singular(p.base)) ++finite_expected;
        CHECK(boundary_finite(g, 3).size() == finite_expected);
        // Brute force lassos: canonicalize every (prefix, closed word) pair.
        std::set<BoundaryPath> expected;
        for (int pl = 0; pl <= 2; ++pl) {
            for (int cl = 1; cl <= 3; ++cl) {
                for (const auto& pre : enumerate_paths(g, pl)) {
                    for (const auto& cyc : enumerate_paths(g, cl)) {
                        if (path_range(g, cyc) != cyc.base) continue;
                        if (pl > 0 && pre.base != path_range(g, cyc)) continue;
                        Lasso l = canonical_lasso(pre.edges, cyc.edges);
                        if (static_cast<int>(l.prefix.size()) > 2 ||
                            static_cast<int>(l.cycle.size()) > 3)
                            continue;
                        expected.insert(BoundaryPath{l});
                    }
                }
            }
        }
        auto got = lassos(g, 2, 3);
        CHECK(got.size() == expected.size());
        CHECK(std::set<BoundaryPath>(got.begin(), got.end()) == expected);
    }
}

TEST_CASE("truncations of boundary paths are exactly the product-form vertices") {
    GenConfig cfg;
    cfg.seed = 29;
    for (std::uint64_t i = 0; i < 15; ++i) {
        Graph g = random_graph(cfg, i);
        for (int k = 1; k <= 3; ++k) CHECK_FALSE(check_boundary_bijection(g, k).failed());
    }
}

TEST_CASE("boundary path literals parse back") {
    Graph g = two_cycle();
    auto ls = lassos(g, 1, 2);
    for (const auto& x : ls) CHECK(parse_boundary_path(g, to_string(x)) == x);
    Graph se = single_edge();
    CHECK(parse_boundary_path(se, "u") == BoundaryPath{Path{"u", {}}});
    CHECK(parse_boundary_path(se, "e") == BoundaryPath{Path{"u", {"e"}}});
    CHECK_THROWS_AS(parse_boundary_path(se, "w"), ParseError);  // regular vertex
    CHECK_THROWS_AS(parse_boundary_path(se, "nope"), ParseError);
}
