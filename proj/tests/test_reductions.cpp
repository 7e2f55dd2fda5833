#include <stdexcept>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "geodis/exact.hpp"
#include "geodis/graphs.hpp"
#include "geodis/reductions.hpp"
#include "oracles.hpp"

using namespace geodis;

TEST_CASE("graph plumbing: DIMACS round trip and validation") {
    const std::string text = "c tetrahedron\np edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
    const CubicGraph g = parse_dimacs_cubic(text);
    CHECK(g.vertex_count == 4);
    CHECK(g.num_edges() == 6);
    CHECK(parse_dimacs(to_dimacs(g.to_general())).num_edges() == 6);

    CHECK_THROWS(parse_dimacs("e 1 2\n"));                       // missing header
    CHECK_THROWS(parse_dimacs("p edge 2 1\ne 1 1\n"));           // loop
    CHECK_THROWS(parse_dimacs_cubic("p edge 2 1\ne 1 2\n"));     // not cubic
    CHECK_THROWS(parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n"));    // duplicate
}

TEST_CASE("special3ds_from_cubic shape") {
    SUBCASE("K4: 28 sets over 30 elements, every element in exactly two sets") {
        const auto sys = special3ds_from_cubic(k4());
        CHECK(sys.num_sets() == 28);
        CHECK(sys.universe == 30);
        CHECK(sys.n_a == 6);

        std::vector<int> in_count(sys.universe, 0);
        std::size_t triples = 0, pairs = 0;
        for (const auto& s : sys.sets) {
            if (s.size() == 3) ++triples;
            if (s.size() == 2) ++pairs;
            for (auto e : s) ++in_count[e];
        }
        CHECK(triples == 4);   // m sets of size 3
        CHECK(pairs == 24);    // 6m sets of size 2
        for (auto c : in_count) CHECK(c == 2);
    }
    SUBCASE("disjoint union doubles everything") {
        const auto sys = special3ds_from_cubic(two_k4());
        CHECK(sys.num_sets() == 56);
        std::vector<int> in_count(sys.universe, 0);
        for (const auto& s : sys.sets)
            for (auto e : s) ++in_count[e];
        for (auto c : in_count) CHECK(c == 2);
    }
    SUBCASE("prism: 7m = 42 sets") {
        CHECK(special3ds_from_cubic(prism()).num_sets() == 42);
    }
}

TEST_CASE("forward_solution produces feasible selections of size |ds| + 2m") {
    const auto check_forward = [](const CubicGraph& g, const std::vector<std::size_t>& ds) {
        const auto sel = forward_solution(g, ds);
        CHECK(sel.size() == ds.size() + 2 * g.vertex_count);
        // feasibility confirmed against the exhaustive set-domination oracle
        const auto rows = membership_matrix(special3ds_from_cubic(g));
        std::uint64_t mask = 0;
        for (auto s : sel) mask |= std::uint64_t{1} << s;
        CHECK(oracles::set_selection_dominates(rows, mask));
    };

    check_forward(k4(), {0});
    check_forward(k4(), {1});
    check_forward(k4(), {0, 1, 2, 3});
    check_forward(prism(), {0, 4});
    check_forward(prism(), {0, 1, 2, 3, 4, 5});
    check_forward(k33(), {0, 3});

    CHECK_THROWS_AS(forward_solution(k33(), {0}), std::invalid_argument);  // not dominating
}

TEST_CASE("forward solutions of minimum graph DS match the set-system optimum") {
    // desk-scale corpus up to m = 8 vertices
    for (const auto& g : {k4(), prism(), k33(), two_k4()}) {
        const std::size_t gamma = oracles::graph_min_ds(g.to_general());
        const auto sys = special3ds_from_cubic(g);
        const auto opt = exact_set_ds(sys);
        REQUIRE(opt.proven);
        CHECK(opt.optimum == gamma + 2 * g.vertex_count);
    }
}

TEST_CASE("backward_solution round trip never loses quality") {
    // every dominating set of graphs with m <= 6, enumerated exhaustively
    for (const auto& g : {k4(), prism(), k33()}) {
        const auto gg = g.to_general();
        const auto sys = special3ds_from_cubic(g);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.vertex_count); ++mask) {
            if (!oracles::graph_dominating(gg, mask)) continue;
            std::vector<std::size_t> ds;
            for (std::size_t v = 0; v < g.vertex_count; ++v)
                if (mask >> v & 1) ds.push_back(v);
            const auto f2 = forward_solution(g, ds);
            const auto f1 = backward_solution(g, sys, f2);
            CHECK(f1.size() <= ds.size());
            CHECK(is_dominating_set(gg, f1));
        }
    }
}

TEST_CASE("backward_solution rejects infeasible input") {
    const auto g = k4();
    const auto sys = special3ds_from_cubic(g);
    CHECK_THROWS_AS(backward_solution(g, sys, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("A1 embedding is incidence-exact and preserves the DS optimum") {
    const auto sys = special3ds_from_cubic(k4());
    const auto emb = embed_a1(sys);
    CHECK(emb.objects.size() == 28);
    CHECK(emb.points.size() == 30);
    const auto want = membership_matrix(sys);
    for (std::size_t i = 0; i < emb.incidence.size(); ++i) CHECK(emb.incidence[i] == want[i]);
    CHECK(exact_ds(emb).optimum == 9);

    SUBCASE("single 2-element set system: one rectangle covering its points") {
        SetSystem tiny;
        tiny.universe = 2;
        tiny.n_a = 0;
        tiny.sets = {{0, 1}};
        tiny.labels = {"b1", "b2"};
        const auto e = embed_a1(tiny);
        CHECK(e.objects.size() == 1);
        CHECK(e.incidence[0].count() == 2);
    }
}

TEST_CASE("A3 and A5 embeddings are incidence-exact with optimum 9 on K4") {
    const auto sys = special3ds_from_cubic(k4());
    for (const auto& emb : {embed_a3_strips(sys), embed_a5_shadows(sys)}) {
        const auto want = membership_matrix(sys);
        REQUIRE(emb.incidence.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(emb.incidence[i] == want[i]);
        CHECK(exact_ds(emb).optimum == 9);
    }
    SUBCASE("empty system embeds to an empty instance") {
        SetSystem none;
        CHECK(embed_a3_strips(none).objects.empty());
        CHECK(embed_a5_shadows(none).objects.empty());
    }
}

TEST_CASE("four_edge_coloring is proper on assorted cubic graphs") {
    for (const auto& g : {k4(), prism(), k33(), two_k4(), petersen()}) {
        const auto color = four_edge_coloring(g);
        REQUIRE(color.size() == g.num_edges());
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            CHECK(color[e] >= 0);
            CHECK(color[e] < 4);
            for (std::size_t f = e + 1; f < g.num_edges(); ++f) {
                const auto& a = g.edges[e];
                const auto& b = g.edges[f];
                const bool touch = a.first == b.first || a.first == b.second ||
                                   a.second == b.first || a.second == b.second;
                if (touch) CHECK(color[e] != color[f]);
            }
        }
    }
}

TEST_CASE("triangle embedding: incidence equals the vertex-edge relation") {
    for (const auto& g : {k4(), prism(), k33()}) {
        const auto emb = embed_triangles_from_cubic_is(g);
        REQUIRE(emb.objects.size() == g.vertex_count);
        REQUIRE(emb.points.size() == g.num_edges());
        for (std::size_t v = 0; v < g.vertex_count; ++v) {
            const auto inc = g.incident_edges(v);
            CHECK(emb.incidence[v].count() == 3);
            for (auto e : inc) CHECK(emb.incidence[v].test(e));
        }
    }
}

TEST_CASE("triangle and circle embeddings preserve the maximum independent set") {
    const std::map<std::string, std::pair<CubicGraph, std::size_t>> cases = {
        {"k4", {k4(), 1}},     {"k33", {k33(), 3}},      {"prism", {prism(), 2}},
        {"two_k4", {two_k4(), 2}}, {"petersen", {petersen(), 4}}};
    for (const auto& [name, pair] : cases) {
        CAPTURE(name);
        const auto& [g, expect] = pair;
        CHECK(oracles::graph_max_is(g.to_general()) == expect);
        CHECK(exact_is(embed_triangles_from_cubic_is(g)).optimum == expect);
        CHECK(exact_is(embed_circles_from_cubic_is(g)).optimum == expect);
    }
}

TEST_CASE("edge subdivision shifts the optima on fixed graphs") {
    // single edge, 2 dummies: P2 -> P4, max IS 1 -> 2
    const GeneralGraph p2 = make_graph(2, {{0, 1}});
    CHECK(oracles::graph_max_is(p2) == 1);
    CHECK(oracles::graph_max_is(subdivide_edge(p2, {0, 1}, 2)) == 2);

    // single edge, 3 dummies: P2 -> P5, min DS 1 -> 2
    CHECK(oracles::graph_min_ds(p2) == 1);
    CHECK(oracles::graph_min_ds(subdivide_edge(p2, {0, 1}, 3)) == 2);

    // C4 edge with 4 dummies: max IS rises by exactly 2
    const GeneralGraph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(oracles::graph_max_is(subdivide_edge(c4, {0, 1}, 4)) ==
          oracles::graph_max_is(c4) + 2);

    CHECK_THROWS_AS(subdivide_edge(c4, {0, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(subdivide_edge(c4, {0, 1}, 0), std::invalid_argument);
}

TEST_CASE("edge subdivision shifts the optima on random graphs") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 12; ++it) {
        // random connected graph on 5..7 vertices: spanning tree plus extras
        const std::size_t n = 5 + it % 3;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t v = 1; v < n; ++v) {
            const std::size_t u = rng() % v;
            edges.push_back({u, v});
            seen.insert({u, v});
        }
        for (int extra = 0; extra < 3; ++extra) {
            const std::size_t u = rng() % n, v = rng() % n;
            if (u == v) continue;
            const auto key = std::minmax(u, v);
            if (seen.insert({key.first, key.second}).second)
                edges.push_back({key.first, key.second});
        }
        const GeneralGraph g = make_graph(n, edges);
        const auto e = edges[rng() % edges.size()];
        for (std::size_t k : {std::size_t{1}, std::size_t{2}}) {
            CHECK(oracles::graph_max_is(subdivide_edge(g, e, 2 * k)) ==
                  oracles::graph_max_is(g) + k);
            CHECK(oracles::graph_min_ds(subdivide_edge(g, e, 3 * k)) ==
                  oracles::graph_min_ds(g) + k);
        }
    }
}

TEST_CASE("embedded instances serialize and reload") {
    const auto sys = special3ds_from_cubic(k4());
    for (const auto& emb : {embed_a1(sys), embed_a3_strips(sys), embed_a5_shadows(sys),
                            embed_triangles_from_cubic_is(k4()),
                            embed_circles_from_cubic_is(k4())}) {
        const auto back = embedded_from_json(embedded_to_json(emb));
        REQUIRE(back.objects.size() == emb.objects.size());
        REQUIRE(back.points.size() == emb.points.size());
        for (std::size_t i = 0; i < emb.incidence.size(); ++i)
            CHECK(back.incidence[i] == emb.incidence[i]);
    }
}

TEST_CASE("set system JSON round trip") {
    const auto sys = special3ds_from_cubic(prism());
    const auto back = set_system_from_json(set_system_to_json(sys));
    CHECK(back.universe == sys.universe);
    CHECK(back.n_a == sys.n_a);
    CHECK(back.sets == sys.sets);
    CHECK(back.labels == sys.labels);
}
