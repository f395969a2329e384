#include <catch2/catch_amalgamated.hpp>

#include "curv/builders.hpp"
#include "curv/canonical.hpp"
#include "curv/topology.hpp"
#include "oracles.hpp"

using namespace curv;

namespace {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::on_vertices(n, edges);
}

// Apex vertex n adjacent to everything; cones collapse recursively.
Graph cone_over(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < n; ++p) {
        edges.push_back({g.vertex_at(p), n});
        const Bits& row = g.neighbors_at(p);
        for (int q = row.find_next(p); q != Bits::npos; q = row.find_next(q))
            edges.push_back({g.vertex_at(p), g.vertex_at(q)});
    }
    std::vector<int> ids = g.vertices();
    ids.push_back(n);
    return Graph::from_edges(ids, edges);
}

Graph relabeled_copy(const Graph& g, SeededRng& rng) {
    std::vector<int> perm = rng.permutation(g.order());
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < g.order(); ++p) {
        const Bits& row = g.neighbors_at(p);
        for (int q = row.find_next(p); q != Bits::npos; q = row.find_next(q))
            edges.push_back({perm[p], perm[q]});
    }
    return Graph::on_vertices(g.order(), edges);
}

}  // namespace

TEST_CASE("canonical form is an isomorphism invariant", "[topology]") {
    SeededRng rng(99);
    std::vector<Graph> samples = {cycle(6), wheel(5), octahedron(), test::random_graph(7, 40, rng),
                                  test::random_graph(8, 60, rng)};
    for (const Graph& g : samples) {
        CanonicalForm a = canonical_form(g);
        for (int copy = 0; copy < 3; ++copy)
            CHECK(canonical_form(relabeled_copy(g, rng)).same_class(a));
    }
}

TEST_CASE("canonical form separates regular non-isomorphic pairs", "[topology]") {
    // C_6 vs two triangles: 1-WL cannot split these; individualization must.
    Graph two_triangles = Graph::on_vertices(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(canonical_form(cycle(6)).same_class(canonical_form(two_triangles)));

    Graph k33 = Graph::on_vertices(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                       {2, 3}, {2, 4}, {2, 5}});
    Graph prism = Graph::on_vertices(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                         {0, 3}, {1, 4}, {2, 5}});
    CHECK_FALSE(canonical_form(k33).same_class(canonical_form(prism)));
}

TEST_CASE("contractibility base cases and named graphs", "[topology]") {
    CHECK_FALSE(is_contractible(Graph()));
    CHECK(is_contractible(Graph::on_vertices(1, {})));
    CHECK_FALSE(is_contractible(cycle(4)));

    std::vector<int> witness;
    REQUIRE(is_contractible(wheel(6), &witness));
    REQUIRE(witness.size() == 7);
    CHECK(replay_collapse(wheel(6), witness));
    CHECK_FALSE(replay_collapse(cycle(4), {0, 1, 2, 3}));
}

TEST_CASE("cones over arbitrary graphs are contractible", "[topology]") {
    SeededRng rng(31337);
    for (int trial = 0; trial < 15; ++trial) {
        Graph base = test::random_graph(1 + static_cast<int>(rng.below(7)), 40, rng);
        Graph coned = cone_over(base);
        std::vector<int> witness;
        CAPTURE(trial);
        REQUIRE(is_contractible(coned, &witness));
        CHECK(replay_collapse(coned, witness));
        CHECK(euler_characteristic(coned) == 1);
    }
}

TEST_CASE("contractible implies chi = 1 on random graphs", "[topology]") {
    SeededRng rng(5150);
    int hits = 0;
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = test::random_graph(1 + static_cast<int>(rng.below(7)), 55, rng);
        if (is_contractible(g)) {
            ++hits;
            CHECK(euler_characteristic(g) == 1);
        }
    }
    CHECK(hits > 5);  // the sample actually exercises the positive branch
}

TEST_CASE("sphere recognition base dimensions", "[topology]") {
    CHECK(is_dsphere(Graph(), -1));
    CHECK_FALSE(is_dsphere(Graph::on_vertices(1, {}), -1));
    CHECK(is_dsphere(Graph::on_vertices(2, {}), 0));
    CHECK_FALSE(is_dsphere(Graph::on_vertices(2, {{0, 1}}), 0));
    CHECK_FALSE(is_dsphere(cycle(3), 1));
    CHECK(is_dsphere(cycle(4), 1));
    CHECK(is_dsphere(cycle(17), 1));
    CHECK_FALSE(is_dsphere(wheel(5), 1));
}

TEST_CASE("sphere recognition on polytope graphs", "[topology]") {
    CHECK(is_dsphere(octahedron(), 2));
    CHECK(is_dsphere(icosahedron(), 2));
    CHECK_FALSE(is_dsphere(octahedron(), 1));
    CHECK_FALSE(is_dsphere(complete_graph(4), 2));
    CHECK(is_dsphere(cross_polytope(4), 3));

    TopologyOptions exhaustive;
    exhaustive.puncture = PunctureMode::AnyVertex;
    CHECK(is_dsphere(octahedron(), 2, exhaustive));
}

TEST_CASE("recognized spheres have chi = 1 + (-1)^d", "[topology]") {
    for (int d = 1; d <= 4; ++d) {
        Graph s = cross_polytope(d + 1);
        REQUIRE(is_dsphere(s, d));
        CHECK(euler_characteristic(s) == 1 + (d % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("d-graph recognition", "[topology]") {
    CHECK(is_dgraph(icosahedron(), 2));
    CHECK(is_dgraph(octahedron(), 2));
    CHECK_FALSE(is_dgraph(complete_graph(4), 2));
    CHECK_FALSE(is_dgraph(Graph(), 1));
    CHECK(is_dgraph(cycle(5), 1));
    CHECK_FALSE(is_dgraph(cycle(3), 1));

    TopologyReport r = check_dgraph(complete_graph(4), 2);
    CHECK_FALSE(r.holds);
    CHECK(r.failing_vertex == 0);
}

TEST_CASE("memoized recursion agrees with non-memoized", "[topology]") {
    SeededRng rng(424242);
    TopologyOptions memo, plain;
    plain.memoize = false;
    int done = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng.below(12));
        Graph g = test::random_graph(n, 25 + static_cast<int>(rng.below(40)), rng);
        CAPTURE(trial, n);
        CHECK(is_contractible(g, nullptr, memo) == is_contractible(g, nullptr, plain));
        int d = 1 + static_cast<int>(rng.below(2));
        CHECK(is_dsphere(g, d, memo) == is_dsphere(g, d, plain));
        ++done;
    }
    CHECK(done == 40);
    for (const Graph& g : {cycle(8), wheel(6), octahedron(), cross_polytope(4)}) {
        CHECK(is_contractible(g, nullptr, memo) == is_contractible(g, nullptr, plain));
        CHECK(is_dsphere(g, 2, memo) == is_dsphere(g, 2, plain));
    }
}

TEST_CASE("memoized witnesses transfer across isomorphic copies", "[topology]") {
    SeededRng rng(112);
    for (int trial = 0; trial < 10; ++trial) {
        Graph base = cone_over(test::random_graph(2 + static_cast<int>(rng.below(6)), 45, rng));
        std::vector<int> w1;
        REQUIRE(is_contractible(base, &w1));  // seeds the memo for this class
        Graph copy = relabeled_copy(base, rng);
        std::vector<int> w2;
        REQUIRE(is_contractible(copy, &w2));  // likely a memo hit; must still replay
        CHECK(replay_collapse(copy, w2));
    }
}

TEST_CASE("node budget produces an undecided error, not an answer", "[topology]") {
    TopologyOptions opt;
    opt.node_budget = 3;
    opt.memoize = false;
    CHECK_THROWS_AS(is_dsphere(cross_polytope(4), 3, opt), budget_exceeded);
    CHECK_THROWS_WITH(is_contractible(wheel(8), nullptr, opt),
                      Catch::Matchers::ContainsSubstring("undecided-budget"));
}
