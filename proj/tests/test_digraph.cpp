#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "rooklab/bitrule.hpp"
#include "rooklab/digraph.hpp"

using namespace rooklab;

namespace {

Digraph directed_cycle(int n) {
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
    return Digraph::from_arcs(n, arcs);
}

Digraph transitive_tournament(int n) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
    return Digraph::from_arcs(n, arcs);
}

Digraph random_digraph(std::mt19937& rng, int n, double density) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && (rng() % 1000) < density * 1000) arcs.emplace_back(u, v);
    return Digraph::from_arcs(n, arcs);
}

} // namespace

TEST_CASE("from_arcs constructs, deduplicates, rejects") {
    const Digraph d = Digraph::from_arcs(2, {{0, 1}});
    CHECK(d.arc_count() == 1);
    CHECK(d.has_arc(0, 1));
    CHECK_FALSE(d.has_arc(1, 0));

    CHECK(Digraph::from_arcs(3, {{0, 1}, {0, 1}}).arc_count() == 1);
    CHECK_THROWS_AS(Digraph::from_arcs(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph::from_arcs(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph::from_arcs(2, {{-1, 0}}), std::invalid_argument);
    CHECK(Digraph::from_arcs(0, {}).vertex_count() == 0);
}

TEST_CASE("opposite arc detection") {
    CHECK(is_oriented(directed_cycle(4)));
    const Digraph bad = Digraph::from_arcs(2, {{0, 1}, {1, 0}});
    const auto w = find_opposite_pair(bad);
    REQUIRE(w.has_value());
    CHECK(w->u == 0);
    CHECK(w->v == 1);
    CHECK(is_oriented(build_rook_digraph(8).graph));
}

TEST_CASE("induced subdigraphs") {
    const RookDigraph d4 = build_rook_digraph(4);
    std::vector<int> all(d4.graph.vertex_count());
    for (int v = 0; v < d4.graph.vertex_count(); ++v) all[v] = v;
    const auto full = induced_subdigraph(d4.graph, all);
    CHECK(full.graph.arcs() == d4.graph.arcs());

    // cells [1,2]^2 of the 4-board are the 2-board: ids 0,1,4,5
    const auto sub = induced_subdigraph(d4.graph, std::vector<int>{0, 1, 4, 5});
    const RookDigraph d2 = build_rook_digraph(2);
    REQUIRE(sub.graph.arc_count() == 4);
    for (const auto& [u, v] : d2.graph.arcs()) {
        const int bu = (u / 2) * 4 + (u % 2), bv = (v / 2) * 4 + (v % 2);
        const auto iu = std::lower_bound(sub.original_ids.begin(), sub.original_ids.end(), bu);
        const auto iv = std::lower_bound(sub.original_ids.begin(), sub.original_ids.end(), bv);
        CHECK(sub.graph.has_arc(static_cast<int>(iu - sub.original_ids.begin()),
                                static_cast<int>(iv - sub.original_ids.begin())));
    }

    const auto single = induced_subdigraph(d4.graph, std::vector<int>{7});
    CHECK(single.graph.vertex_count() == 1);
    CHECK(single.graph.arc_count() == 0);

    CHECK_THROWS_AS(induced_subdigraph(d4.graph, std::vector<int>{99}), std::invalid_argument);
}

TEST_CASE("directed triangle finder") {
    const auto w = find_directed_triangle(directed_cycle(3));
    REQUIRE(w.has_value());
    CHECK(w->u == 0);
    CHECK(w->v == 1);
    CHECK(w->w == 2);

    CHECK_FALSE(find_directed_triangle(build_rook_digraph(2).graph).has_value());
    CHECK_FALSE(find_directed_triangle(build_rook_digraph(16).graph).has_value());
}

TEST_CASE("triangle finder agrees with the all-triples scan") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Digraph d = random_digraph(rng, n, 0.3 + 0.05 * (trial % 10));
        std::optional<TriangleWitness> naive;
        for (int u = 0; u < n && !naive; ++u)
            for (int v = 0; v < n && !naive; ++v)
                for (int w = 0; w < n && !naive; ++w)
                    if (u != v && v != w && u != w && d.has_arc(u, v) && d.has_arc(v, w) &&
                        d.has_arc(w, u))
                        naive = TriangleWitness{u, v, w};
        const auto fast = find_directed_triangle(d);
        REQUIRE(fast.has_value() == naive.has_value());
        if (fast) {
            CHECK(fast->u == naive->u);
            CHECK(fast->v == naive->v);
            CHECK(fast->w == naive->w);
        }
    }
}

TEST_CASE("claw finder") {
    // star with orientations mixed, no leaf-leaf edges
    const Digraph star = Digraph::from_arcs(4, {{0, 1}, {2, 0}, {0, 3}});
    const auto w = find_claw(star);
    REQUIRE(w.has_value());
    CHECK(w->center == 0);
    CHECK(w->leaves[0] == 1);
    CHECK(w->leaves[1] == 2);
    CHECK(w->leaves[2] == 3);

    // underlying K4 (transitive tournament) has no independent triple
    CHECK_FALSE(find_claw(transitive_tournament(4)).has_value());
    CHECK_FALSE(find_claw(build_rook_digraph(8).graph).has_value());
}

TEST_CASE("acyclicity with validated witnesses") {
    const Digraph empty = Digraph::from_arcs(5, {});
    const auto r1 = is_acyclic(empty);
    CHECK(r1.acyclic);
    CHECK(r1.topo_order.size() == 5);

    const auto r2 = is_acyclic(directed_cycle(4));
    CHECK_FALSE(r2.acyclic);
    REQUIRE(r2.cycle.size() == 4);

    const auto r3 = is_acyclic(transitive_tournament(5));
    CHECK(r3.acyclic);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Digraph d = random_digraph(rng, n, 0.3);
        const auto res = is_acyclic(d);
        if (res.acyclic) {
            // topological order respects every arc
            std::vector<int> pos(n);
            REQUIRE(static_cast<int>(res.topo_order.size()) == n);
            for (int i = 0; i < n; ++i) pos[res.topo_order[i]] = i;
            for (const auto& [u, v] : d.arcs())
                if (pos[u] >= pos[v]) REQUIRE(false);
        } else {
            // the cycle traverses existing arcs only
            REQUIRE(res.cycle.size() >= 2);
            for (std::size_t i = 0; i < res.cycle.size(); ++i)
                if (!d.has_arc(res.cycle[i], res.cycle[(i + 1) % res.cycle.size()]))
                    REQUIRE(false);
        }
    }
}

TEST_CASE("induced directed 4-cycle test") {
    const RookDigraph d2 = build_rook_digraph(2);
    CHECK(is_induced_directed_4cycle(d2.graph, {0, 1, 2, 3}));
    CHECK(is_induced_directed_4cycle(d2.graph, {3, 1, 0, 2})); // order of quad irrelevant

    CHECK_FALSE(is_induced_directed_4cycle(transitive_tournament(4), {0, 1, 2, 3}));

    const RookDigraph d4 = build_rook_digraph(4);
    const std::array<int, 4> cells = {d4.vertex_id({1, 1}), d4.vertex_id({1, 2}),
                                      d4.vertex_id({2, 2}), d4.vertex_id({2, 1})};
    CHECK(is_induced_directed_4cycle(d4.graph, cells));

    CHECK_THROWS_AS(is_induced_directed_4cycle(d2.graph, {0, 0, 1, 2}), std::invalid_argument);

    // two opposite 2-cycles are not a 4-cycle
    const Digraph twin = Digraph::from_arcs(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
    CHECK_FALSE(is_induced_directed_4cycle(twin, {0, 1, 2, 3}));
}

TEST_CASE("boards are triangle-free up to N = 64") {
    for (int n : {1, 2, 3, 5, 9, 17, 33, 64})
        if (find_directed_triangle(build_rook_digraph(n).graph)) REQUIRE(false);
    CHECK(true);
}

TEST_CASE("boards are claw-free up to N = 16") {
    for (int n : {1, 2, 3, 4, 6, 11, 16})
        if (find_claw(build_rook_digraph(n).graph)) REQUIRE(false);
    CHECK(true);
}

TEST_CASE("equal-gap squares induce directed 4-cycles") {
    for (int n : {2, 3, 5, 8, 13}) {
        const RookDigraph rd = build_rook_digraph(n);
        for (int a = 1; a <= n; ++a)
            for (int c = a + 1; c <= n; ++c)
                for (int b = 1; b <= n; ++b)
                    for (int d = b + 1; d <= n; ++d) {
                        if (!generalized_square_predicate(a, c, b, d)) continue;
                        const std::array<int, 4> quad = {
                            rd.vertex_id({a, b}), rd.vertex_id({a, d}),
                            rd.vertex_id({c, b}), rd.vertex_id({c, d})};
                        if (!is_induced_directed_4cycle(rd.graph, quad)) REQUIRE(false);
                    }
    }
    CHECK(true);
}
