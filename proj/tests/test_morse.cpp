#include <catch2/catch_amalgamated.hpp>

#include "curv/builders.hpp"
#include "curv/morse.hpp"
#include "oracles.hpp"

using namespace curv;

namespace {

Coloring coloring_of(const Graph& g, std::vector<long long> vals) {
    Coloring f;
    for (int p = 0; p < g.order(); ++p) f.values[g.vertex_at(p)] = vals[p];
    return f;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::on_vertices(n, edges);
}

}  // namespace

TEST_CASE("local injectivity", "[morse]") {
    CHECK(is_locally_injective(cycle(4), coloring_of(cycle(4), {0, 1, 0, 1})));
    CHECK_FALSE(is_locally_injective(complete_graph(3), coloring_of(complete_graph(3), {0, 1, 1})));
    CHECK(is_locally_injective(cycle(5), coloring_of(cycle(5), {3, 1, 4, 0, 2})));

    Coloring partial;
    partial.values[0] = 1;
    CHECK_THROWS_WITH(is_locally_injective(cycle(4), partial),
                      Catch::Matchers::ContainsSubstring("missing vertex"));
    CHECK_THROWS_WITH(ph_index(cycle(4), coloring_of(cycle(4), {0, 0, 1, 2}), 0),
                      Catch::Matchers::ContainsSubstring("ambiguous level"));
}

TEST_CASE("ph_index on local minima and saddles", "[morse]") {
    Graph w = wheel(6);  // boundary 0..5, center 6
    Coloring f = coloring_of(w, {1, 2, 20, 3, 4, 21, 10});
    // center sits above the two opposite arcs {0,1} and {3,4}
    CHECK(ph_index(w, f, 6) == -1);
    CHECK(ph_index(w, f, 0) == 1);  // global minimum

    Coloring g = coloring_of(w, {1, 2, 3, 4, 5, 6, 0});
    CHECK(ph_index(w, g, 6) == 1);  // center minimal
}

TEST_CASE("index vectors on cycles and polytopes", "[morse]") {
    Graph c4 = cycle(4);
    Coloring f = coloring_of(c4, {0, 1, 2, 3});
    IndexVector iv = index_vector(c4, f);
    // per-vertex oracle: S^- of the max is both neighbors (chi 2, index -1)
    for (int v : c4.vertices()) CHECK(iv.indices.at(v) == test::index_oracle(c4, f, v));
    CHECK(iv.indices.at(0) == 1);
    CHECK(iv.indices.at(1) == 0);
    CHECK(iv.indices.at(2) == 0);
    CHECK(iv.indices.at(3) == -1);
    CHECK(iv.sum() == 0);

    SeededRng rng(8);
    for (int trial = 0; trial < 5; ++trial) {
        CHECK(index_vector(octahedron(), random_coloring(octahedron(), rng.next())).sum() == 2);
        CHECK(index_vector(icosahedron(), random_coloring(icosahedron(), rng.next())).sum() == 2);
    }

    Graph w5 = wheel(5);
    Coloring center_min = coloring_of(w5, {1, 2, 3, 4, 5, 0});
    CHECK(index_vector(w5, center_min).indices.at(5) == 1);
}

TEST_CASE("poincare-hopf sum equals chi, exhaustively on small graphs", "[morse]") {
    SeededRng rng(1001);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng.below(6));  // up to all 7! orders
        Graph g = test::random_graph(n, 30 + static_cast<int>(rng.below(50)), rng);
        long long chi = euler_characteristic(g);
        std::vector<int> rank(n);
        for (int i = 0; i < n; ++i) rank[i] = i;
        IndexEvaluator eval(g);
        do {
            long long sum = 0;
            for (int p = 0; p < n; ++p) sum += eval.index_at(p, rank);
            REQUIRE(sum == chi);
        } while (std::next_permutation(rank.begin(), rank.end()));
    }
}

TEST_CASE("evaluator agrees with the compositional ph_index", "[morse]") {
    SeededRng rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = test::random_graph(1 + static_cast<int>(rng.below(8)), 50, rng);
        Coloring f = random_coloring(g, rng.next());
        IndexEvaluator eval(g);
        std::vector<int> rank = rank_of(g, f);
        for (int p = 0; p < g.order(); ++p)
            CHECK(eval.index_at(p, rank) == ph_index(g, f, g.vertex_at(p)));
    }
}

TEST_CASE("index depends only on the order type", "[morse]") {
    SeededRng rng(90210);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = test::random_graph(2 + static_cast<int>(rng.below(6)), 50, rng);
        Coloring f = random_coloring(g, rng.next());
        Coloring warped;
        for (const auto& [v, x] : f.values) {
            // strictly monotone: x -> x^3 + 7x + 1/3
            warped.values[v] = x * x * x + 7 * x + Rational(1, 3);
        }
        CHECK(index_vector(g, f).indices == index_vector(g, warped).indices);
    }
}

TEST_CASE("symmetric index on 2-graphs", "[morse]") {
    Graph oct = octahedron();
    SeededRng rng(5);
    Coloring f = random_coloring(oct, 17);
    // locate min and a regular vertex by rank
    std::vector<int> rank = rank_of(oct, f);
    int min_pos = 0;
    for (int p = 0; p < oct.order(); ++p)
        if (rank[p] == 0) min_pos = p;
    CHECK(symmetric_index(oct, f, oct.vertex_at(min_pos)) == 1);

    Rational total = 0;
    for (int v : oct.vertices()) total += symmetric_index(oct, f, v);
    CHECK(total == 2);

    Graph ico = icosahedron();
    for (int trial = 0; trial < 5; ++trial) {
        Coloring h = random_coloring(ico, rng.next());
        Rational sum = 0;
        for (int v : ico.vertices()) sum += symmetric_index(ico, h, v);
        CHECK(sum == 2);
    }
}

TEST_CASE("symmetric index vanishes at regular 2-graph vertices", "[morse]") {
    // one ascending and one descending boundary arc around the center
    Graph w = wheel(6);
    Coloring f = coloring_of(w, {1, 2, 3, 20, 21, 22, 10});
    CHECK(ph_index(w, f, 6) == 0);
    CHECK(symmetric_index(w, f, 6) == 0);
}

TEST_CASE("divisor of the max-vertex field reproduces the index vector", "[morse]") {
    // every labeled graph on up to 6 vertices, a random coloring each
    SeededRng rng(640);
    for (int n = 1; n <= 6; ++n) {
        unsigned masks = 1u << (n * (n - 1) / 2);
        long long mismatches = 0;
        for (unsigned mask = 0; mask < masks; ++mask) {
            Graph g = test::graph_from_mask(n, mask);
            Coloring f = random_coloring(g, rng.next());
            if (divisor_from_field(g, field_from_max(g, f)).indices !=
                index_vector(g, f).indices)
                ++mismatches;
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("divisor of hand-built assignments on K_3", "[morse]") {
    Graph k3 = complete_graph(3);
    FieldAssignment lex_min, lex_max;
    for (Simplex& s : cliques(k3)) {
        lex_min.choice.push_back({s, s.verts.front()});
        lex_max.choice.push_back({s, s.verts.back()});
    }
    // hand enumeration over the 7 simplices of K_3
    IndexVector dmin = divisor_from_field(k3, lex_min);
    CHECK(dmin.indices.at(0) == 0);
    CHECK(dmin.indices.at(1) == 0);
    CHECK(dmin.indices.at(2) == 1);
    IndexVector dmax = divisor_from_field(k3, lex_max);
    CHECK(dmax.indices.at(0) == 1);
    CHECK(dmax.indices.at(1) == 0);
    CHECK(dmax.indices.at(2) == 0);
}

TEST_CASE("any field assignment has divisor summing to chi", "[morse]") {
    SeededRng rng(417);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = test::random_graph(1 + static_cast<int>(rng.below(6)), 50, rng);
        FieldAssignment a;
        for (Simplex& s : cliques(g)) {
            int pick = s.verts[rng.below(s.verts.size())];
            a.choice.push_back({s, pick});
        }
        if (g.order() == 0) continue;
        CHECK(divisor_from_field(g, a).sum() == euler_characteristic(g));
    }
}

TEST_CASE("field assignment validation", "[morse]") {
    Graph k3 = complete_graph(3);
    FieldAssignment bad;
    for (Simplex& s : cliques(k3)) bad.choice.push_back({s, s.verts.front()});
    bad.choice[3].second = 2;  // {0,1} -> 2: not a member
    CHECK_THROWS_WITH(divisor_from_field(k3, bad),
                      Catch::Matchers::ContainsSubstring("not in its simplex"));

    FieldAssignment partial;
    partial.choice.push_back({Simplex{{0}}, 0});
    CHECK_THROWS_WITH(divisor_from_field(k3, partial),
                      Catch::Matchers::ContainsSubstring("every simplex"));
}

TEST_CASE("random colorings are reproducible and injective", "[morse]") {
    Graph oct = octahedron();
    CHECK(random_coloring(oct, 42).values == random_coloring(oct, 42).values);
    CHECK(random_coloring(oct, 42).values != random_coloring(oct, 43).values);
    for (uint64_t seed = 0; seed < 50; ++seed)
        CHECK(is_locally_injective(oct, random_coloring(oct, seed)));
}

TEST_CASE("empirical index average approaches the uniform curvature", "[morse]") {
    Graph oct = octahedron();
    IndexEvaluator eval(oct);
    std::vector<long long> acc(6, 0);
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) {
        std::vector<int> rank = rank_of(oct, random_coloring(oct, 90000 + s));
        for (int p = 0; p < 6; ++p) acc[p] += eval.index_at(p, rank);
    }
    for (int p = 0; p < 6; ++p) {
        double mean = static_cast<double>(acc[p]) / samples;
        CHECK(std::abs(mean - 1.0 / 3.0) < 0.05);
    }
}
