#include <doctest.h>

#include <functional>
#include <random>

#include "topograph/dual.hpp"
#include "topograph/ktheory.hpp"
#include "topograph/textio.hpp"
#include "topograph/verify.hpp"

#include "../support/oracles.hpp"

using namespace topograph;

namespace {

Graph ex71() { return parse_graph("vertex v\nvertex w\nedge e v w\nedge f w ?\n"); }
Graph ex72() { return parse_graph("vertex v\nvertex w\nedge e1 v w\nomega es v ?\n"); }
Graph single_loop() { return parse_graph("vertex v\nedge e v v\n"); }

Mat from_ints(const std::vector<std::vector<long long>>& rows) {
    Mat out;
    for (const auto& r : rows) {
        out.emplace_back();
        for (long long x : r) out.back().push_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("the K-map of the two-vertex partial graph") {
    IntMatrix m = build_map(ex71());
    CHECK(m.col_ids == std::vector<VertexId>{"w"});
    CHECK(m.row_ids == std::vector<VertexId>{"v", "w"});
    CHECK(m.a[0][0] == BigInt(-1));
    CHECK(m.a[1][0] == BigInt(1));
}

TEST_CASE("the K-map of a loop is the 1x1 zero matrix") {
    IntMatrix m = build_map(single_loop());
    REQUIRE(m.a.size() == 1);
    REQUIRE(m.a[0].size() == 1);
    CHECK(m.a[0][0].is_zero());
}

TEST_CASE("the empty subset gives a matrix without columns") {
    IntMatrix m = build_map(single_loop(), std::set<VertexId>{});
    CHECK(m.col_ids.empty());
    CHECK(m.a.size() == 1);
}

TEST_CASE("build_map rejects singular columns") {
    CHECK_THROWS_WITH_AS(build_map(ex71(), std::set<VertexId>{"v"}),
                         doctest::Contains("U ⊄ E⁰_rg"), std::domain_error);
}

TEST_CASE("smith normal form of diag(2,3)") {
    auto snf = smith_normal_form(from_ints({{2, 0}, {0, 3}}));
    REQUIRE(snf.invariant_factors.size() == 2);
    CHECK(snf.invariant_factors[0] == BigInt(1));
    CHECK(snf.invariant_factors[1] == BigInt(6));
    CHECK(mat_equal(mat_mul(mat_mul(snf.p, from_ints({{2, 0}, {0, 3}})), snf.q), snf.d));
}

TEST_CASE("smith normal form of zero and identity") {
    auto z = smith_normal_form(from_ints({{0, 0}, {0, 0}}));
    CHECK(z.rank == 0);
    CHECK(z.invariant_factors.empty());
    auto i = smith_normal_form(mat_identity(3));
    CHECK(i.rank == 3);
    for (const auto& d : i.invariant_factors) CHECK(d == BigInt(1));
}

TEST_CASE("smith normal form certificate on random matrices") {
    std::mt19937_64 eng(3);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t rows = 1 + eng() % 4, cols = 1 + eng() % 4;
        Mat m(rows, std::vector<BigInt>(cols));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<long long>(eng() % 13) - 6;
        auto snf = smith_normal_form(m);
        CHECK(mat_equal(mat_mul(mat_mul(snf.p, m), snf.q), snf.d));
        CHECK(determinant(snf.p).is_unit());
        CHECK(determinant(snf.q).is_unit());
        for (std::size_t i = 0; i + 1 < snf.invariant_factors.size(); ++i)
            CHECK((snf.invariant_factors[i + 1] % snf.invariant_factors[i]).is_zero());
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(snf.d[i][j].is_zero());
    }
}

TEST_CASE("invariant factors agree with the all-minors oracle") {
    std::mt19937_64 eng(8);
    for (int trial = 0; trial < 600; ++trial) {
        std::size_t n = 1 + eng() % 3;
        Mat m(n, std::vector<BigInt>(n));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<long long>(eng() % 7) - 3;
        auto snf = smith_normal_form(m);
        CHECK(snf.invariant_factors == testing::factors_from_minors(m));
    }
}

TEST_CASE("K-groups of the golden graphs") {
    KGroups a = k_groups(ex71());
    CHECK(a.k0.str() == "Z");
    CHECK(a.k1.str() == "0");

    KGroups b = k_groups(ex72());
    CHECK(b.k0.str() == "Z");
    CHECK(b.k1.str() == "0");

    KGroups l = k_groups(single_loop());
    CHECK(l.k0.str() == "Z");
    CHECK(l.k1.str() == "Z");

    KGroups t = k_groups(single_loop(), std::set<VertexId>{});
    CHECK(t.k0.str() == "Z");
    CHECK(t.k1.str() == "0");
}

TEST_CASE("K-groups of Cuntz-type graphs have the expected torsion") {
    // n loops at one vertex: K0 = Z/(n-1), K1 = 0 for n >= 2.
    for (int n = 2; n <= 5; ++n) {
        Graph g;
        g.vertices = {"v"};
        for (int i = 0; i < n; ++i)
            g.groups.push_back(
                {"e" + std::to_string(i), Cardinal::finite(1), "v", VertexId("v")});
        KGroups kg = k_groups(g);
        if (n == 2) {
            CHECK(kg.k0.str() == "0");
        } else {
            REQUIRE(kg.k0.torsion.size() == 1);
            CHECK(kg.k0.torsion[0] == BigInt(n - 1));
        }
        CHECK(kg.k1.str() == "0");
    }
}

TEST_CASE("group printing and equality") {
    AbelianGroup z{1, {}};
    AbelianGroup zero{0, {}};
    AbelianGroup mix{2, {BigInt(2), BigInt(6)}};
    CHECK(z.str() == "Z");
    CHECK(zero.str() == "0");
    CHECK(mix.str() == "Z^2 (+) Z/2 (+) Z/6");
    CHECK(groups_equal(z, AbelianGroup{1, {}}));
    CHECK_FALSE(groups_equal(AbelianGroup{0, {BigInt(2), BigInt(4)}},
                             AbelianGroup{0, {BigInt(8)}}));
    CHECK(groups_equal(AbelianGroup{0, {BigInt(2), BigInt(6)}},
                       AbelianGroup{0, {BigInt(2), BigInt(6)}}));
}

TEST_CASE("K-groups are invariant under the dual") {
    GenConfig cfg;
    cfg.seed = 47;
    for (std::uint64_t i = 0; i < 30; ++i) {
        Graph g = random_graph(cfg, i);
        CHECK_FALSE(check_k_invariance(g).failed());
    }
}

TEST_CASE("relative K-groups are invariant under the relative dual") {
    GenConfig cfg;
    cfg.seed = 53;
    cfg.allow_relative = true;
    for (std::uint64_t i = 0; i < 30; ++i) {
        Graph g = random_graph(cfg, i);
        std::set<VertexId> u = g.relative ? *g.relative : std::set<VertexId>{};
        CHECK_FALSE(check_relative_k_invariance(g, u).failed());
    }
}

TEST_CASE("restriction preserves K-groups when all singular vertices survive") {
    GenConfig cfg;
    cfg.seed = 59;
    for (std::uint64_t i = 0; i < 40; ++i) {
        Graph f = random_graph(cfg, i);
        auto cls = classify(f);
        // Keep domains and singular vertices; drop some regular non-domain vertices.
        std::set<VertexId> keep;
        for (const auto& e : f.groups) keep.insert(e.dom);
        for (const auto& v : cls.singular()) keep.insert(v);
        std::set<VertexId> dropped;
        for (const auto& v : f.vertices)
            if (!keep.count(v)) dropped.insert(v);
        if (dropped.empty()) continue;
        Graph e = restrict_to(f, keep);
        KGroups kf = k_groups(f);
        KGroups ke = k_groups(e);
        CHECK(kf == ke);
    }
}

TEST_CASE("omega groups with defined ranges do not contribute columns") {
    Graph g = parse_graph("vertex v\nvertex w\nomega o v w\nedge e w v\n");
    // w is an infinite receiver, so only v can be regular.
    IntMatrix m = build_map(g);
    CHECK(m.col_ids == std::vector<VertexId>{"v"});
    REQUIRE(m.a.size() == 2);
    CHECK(m.a[0][0] == BigInt(1));   // row v: δ_v
    CHECK(m.a[1][0] == BigInt(-1));  // row w: -δ_{d(e)}
}
