#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curv/graph.hpp"

namespace curv {

/// Cycle graph C_n.
inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph::on_vertices(n, edges);
}

/// Wheel graph: boundary cycle 0..n-1 plus center vertex n adjacent to all.
inline Graph wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel requires n >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        edges.push_back({i, n});
    }
    return Graph::on_vertices(n + 1, edges);
}

/// d-dimensional cross-polytope graph: 2d vertices, all edges except the d
/// antipodal pairs (2i, 2i+1). A (d-1)-sphere; d=3 gives the octahedron.
inline Graph cross_polytope(int d) {
    if (d < 1) throw std::invalid_argument("cross_polytope requires d >= 1");
    int n = 2 * d;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u / 2 == v / 2)) edges.push_back({u, v});
    return Graph::on_vertices(n, edges);
}

inline Graph octahedron() { return cross_polytope(3); }

/// The 12-vertex icosahedron graph; every unit sphere is C_5.
inline Graph icosahedron() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 5; ++i) edges.push_back({0, i});
    for (int i = 6; i <= 10; ++i) edges.push_back({11, i});
    for (int i = 1; i <= 5; ++i) edges.push_back({i, i % 5 + 1});
    for (int i = 6; i <= 10; ++i) edges.push_back({i, (i - 5) % 5 + 6});
    // ring-to-ring: vertex i on the upper ring meets two consecutive lower ones
    for (int i = 1; i <= 5; ++i) {
        edges.push_back({i, i + 5});
        edges.push_back({i, i % 5 + 6});
    }
    return Graph::on_vertices(12, edges);
}

// Graph of a simplicial complex's face poset: one vertex per cell, edges
// between strictly comparable cells. Cells are indexed by (dim, lex) order.
struct RefinedGraph {
    Graph graph;
    std::vector<Simplex> cells;
};

inline RefinedGraph refine_complex(std::vector<Simplex> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    int m = static_cast<int>(cells.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto& a = cells[i].verts;
            const auto& b = cells[j].verts;
            if (a.size() == b.size()) continue;  // (dim, lex) order: i is the smaller cell
            if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
                edges.push_back({i, j});
        }
    return RefinedGraph{Graph::on_vertices(m, edges), std::move(cells)};
}

/// Barycentric refinement: vertices are the simplices of g, edges are strict
/// containment pairs. Preserves the Euler characteristic.
inline RefinedGraph barycentric_full(const Graph& g) { return refine_complex(cliques(g)); }

inline Graph barycentric(const Graph& g) { return barycentric_full(g).graph; }

// Product on pairs of simplices ordered by componentwise containment.
struct ProductGraph {
    Graph graph;
    std::vector<std::pair<Simplex, Simplex>> pairs;  // pairs[id] = (cell of g, cell of h)
};

/// Graph product whose vertices are pairs (a, b) of simplices of the factors;
/// (a,b) ~ (a',b') iff one pair contains the other componentwise. Multiplies
/// Euler characteristics and adds dimensions on d-graph factors.
inline ProductGraph kuenneth_product_full(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0)
        throw std::invalid_argument("kuenneth_product requires nonempty factors");
    std::vector<Simplex> sg = cliques(g);
    std::vector<Simplex> sh = cliques(h);
    int ng = static_cast<int>(sg.size());
    int nh = static_cast<int>(sh.size());

    auto contains = [](const Simplex& big, const Simplex& small) {
        return std::includes(big.verts.begin(), big.verts.end(), small.verts.begin(),
                             small.verts.end());
    };
    // st_g[i][j] = sg[i] subset of sg[j]
    auto subset_table = [&](const std::vector<Simplex>& cells) {
        int m = static_cast<int>(cells.size());
        std::vector<Bits> t(m, Bits(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (contains(cells[j], cells[i])) t[i].set(j);
        return t;
    };
    std::vector<Bits> sub_g = subset_table(sg);
    std::vector<Bits> sub_h = subset_table(sh);

    ProductGraph out;
    out.pairs.reserve(static_cast<size_t>(ng) * nh);
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < nh; ++j) out.pairs.push_back({sg[i], sh[j]});

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < nh; ++j) {
            int id = i * nh + j;
            for (int i2 = 0; i2 < ng; ++i2) {
                bool fwd = sub_g[i].test(i2);   // sg[i] subset sg[i2]
                bool bwd = sub_g[i2].test(i);
                if (!fwd && !bwd) continue;
                for (int j2 = 0; j2 < nh; ++j2) {
                    int id2 = i2 * nh + j2;
                    if (id2 <= id) continue;
                    if ((fwd && sub_h[j].test(j2)) || (bwd && sub_h[j2].test(j)))
                        edges.push_back({id, id2});
                }
            }
        }
    out.graph = Graph::on_vertices(ng * nh, edges);
    return out;
}

inline Graph kuenneth_product(const Graph& g, const Graph& h) {
    return kuenneth_product_full(g, h).graph;
}

/// A 31-vertex projective plane: barycentric refinement of the 6-vertex
/// hemi-icosahedron complex. A 2-graph with Euler characteristic 1.
inline Graph projective_plane() {
    static const int tris[10][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                                    {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
    std::vector<Simplex> cells;
    for (int v = 0; v < 6; ++v) cells.push_back(Simplex{{v}});
    std::map<std::pair<int, int>, int> edge_use;
    for (const auto& t : tris) {
        cells.push_back(Simplex{{t[0], t[1], t[2]}});
        ++edge_use[{t[0], t[1]}];
        ++edge_use[{t[0], t[2]}];
        ++edge_use[{t[1], t[2]}];
    }
    // Closed-surface sanity: all 15 pairs occur, each in exactly two triangles.
    if (edge_use.size() != 15) throw std::logic_error("hemi-icosahedron edge set corrupt");
    for (const auto& [e, uses] : edge_use) {
        if (uses != 2) throw std::logic_error("hemi-icosahedron edge not in two triangles");
        cells.push_back(Simplex{{e.first, e.second}});
    }
    RefinedGraph r = refine_complex(std::move(cells));
    if (r.graph.order() != 31 || euler_characteristic(r.graph) != 1)
        throw std::logic_error("projective plane construction failed validation");
    return r.graph;
}

}  // namespace curv
