#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curv/bits.hpp"
#include "curv/rational.hpp"

namespace curv {

/// A nonempty complete subgraph, held as a strictly sorted vertex-id list.
struct Simplex {
    std::vector<int> verts;

    int dim() const { return static_cast<int>(verts.size()) - 1; }

    bool operator==(const Simplex& o) const { return verts == o.verts; }
    bool operator<(const Simplex& o) const {
        if (verts.size() != o.verts.size()) return verts.size() < o.verts.size();
        return verts < o.verts;
    }
};

/// Simplex counts per dimension: counts[k] = number of k-simplices.
struct FVector {
    std::vector<long long> counts;

    bool operator==(const FVector& o) const { return counts == o.counts; }
};

// Immutable finite simple graph. Vertex ids form a strictly increasing list
// (dense 0..n-1 after I/O normalization); subgraph operations preserve ids.
// Adjacency is stored positionally as bit rows.
class Graph {
public:
    Graph() = default;

    // `vertices` must be strictly increasing; edges are id pairs.
    // Rejects self-loops, duplicate edges and unknown endpoints.
    static Graph from_edges(std::vector<int> vertices, const std::vector<std::pair<int, int>>& edges) {
        Graph g;
        g.verts_ = std::move(vertices);
        for (size_t i = 1; i < g.verts_.size(); ++i)
            if (g.verts_[i - 1] >= g.verts_[i])
                throw std::invalid_argument("vertex ids must be strictly increasing and unique");
        int n = g.order();
        g.adj_.assign(n, Bits(n));
        for (const auto& [u, v] : edges) {
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            int pu = g.position_of(u);
            int pv = g.position_of(v);
            if (g.adj_[pu].test(pv))
                throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ")");
            g.adj_[pu].set(pv);
            g.adj_[pv].set(pu);
        }
        return g;
    }

    // Convenience constructor over the dense vertex set 0..n-1.
    static Graph on_vertices(int n, const std::vector<std::pair<int, int>>& edges) {
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        return from_edges(std::move(ids), edges);
    }

    int order() const { return static_cast<int>(verts_.size()); }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    const std::vector<int>& vertices() const { return verts_; }
    int vertex_at(int pos) const { return verts_[pos]; }

    bool contains(int v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        return it != verts_.end() && *it == v;
    }

    int position_of(int v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        if (it == verts_.end() || *it != v)
            throw std::invalid_argument("no such vertex: " + std::to_string(v));
        return static_cast<int>(it - verts_.begin());
    }

    bool adjacent(int u, int v) const { return adj_[position_of(u)].test(position_of(v)); }
    bool adjacent_at(int pu, int pv) const { return adj_[pu].test(pv); }

    const Bits& neighbors_at(int pos) const { return adj_[pos]; }
    int degree_at(int pos) const { return adj_[pos].count(); }

    std::vector<int> neighbor_ids(int v) const {
        std::vector<int> out;
        const Bits& row = adj_[position_of(v)];
        for (int p = row.find_first(); p != Bits::npos; p = row.find_next(p))
            out.push_back(verts_[p]);
        return out;
    }

    // Induced subgraph on a positional mask; vertex ids are preserved.
    Graph induced_mask(const Bits& keep) const {
        Graph g;
        std::vector<int> pos;
        for (int p = keep.find_first(); p != Bits::npos; p = keep.find_next(p)) {
            pos.push_back(p);
            g.verts_.push_back(verts_[p]);
        }
        int m = static_cast<int>(pos.size());
        g.adj_.assign(m, Bits(m));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (adj_[pos[i]].test(pos[j])) {
                    g.adj_[i].set(j);
                    g.adj_[j].set(i);
                }
        return g;
    }

    Graph without_vertex(int v) const {
        int p = position_of(v);
        Bits keep(order());
        for (int i = 0; i < order(); ++i)
            if (i != p) keep.set(i);
        return induced_mask(keep);
    }

    bool connected() const {
        int n = order();
        if (n == 0) return false;
        Bits seen(n);
        std::vector<int> stack = {0};
        seen.set(0);
        int visited = 1;
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            const Bits& row = adj_[p];
            for (int q = row.find_first(); q != Bits::npos; q = row.find_next(q))
                if (!seen.test(q)) {
                    seen.set(q);
                    ++visited;
                    stack.push_back(q);
                }
        }
        return visited == n;
    }

    bool operator==(const Graph& o) const { return verts_ == o.verts_ && adj_ == o.adj_; }

private:
    std::vector<int> verts_;
    std::vector<Bits> adj_;
};

// Enumerates all cliques as positional vertex lists, grouped by dimension
// in ascending order and lexicographic within each dimension. `kmax` caps
// the dimension (-1 = unbounded). The visitor receives each clique once.
template <class Visitor>
void for_each_clique_position(const Graph& g, int kmax, Visitor&& visit) {
    int n = g.order();
    if (n == 0) return;
    std::vector<std::vector<std::vector<int>>> by_dim;
    std::vector<int> cur;
    cur.reserve(n);

    auto extend = [&](auto&& self, const Bits& cand) -> void {
        for (int p = cand.find_first(); p != Bits::npos; p = cand.find_next(p)) {
            cur.push_back(p);
            int dim = static_cast<int>(cur.size()) - 1;
            if (static_cast<int>(by_dim.size()) <= dim) by_dim.resize(dim + 1);
            by_dim[dim].push_back(cur);
            if (kmax < 0 || dim < kmax) {
                Bits next = cand & g.neighbors_at(p);
                next.clear_upto(p);
                if (next.any()) self(self, next);
            }
            cur.pop_back();
        }
    };

    Bits all(n);
    for (int i = 0; i < n; ++i) all.set(i);
    extend(extend, all);

    for (const auto& bucket : by_dim)
        for (const auto& clique : bucket) visit(clique);
}

/// All complete subgraphs of the Whitney complex, sorted by (dim, lex).
inline std::vector<Simplex> cliques(const Graph& g, int kmax = -1) {
    std::vector<Simplex> out;
    for_each_clique_position(g, kmax, [&](const std::vector<int>& pos) {
        Simplex s;
        s.verts.reserve(pos.size());
        for (int p : pos) s.verts.push_back(g.vertex_at(p));
        out.push_back(std::move(s));
    });
    return out;
}

inline FVector f_vector(const Graph& g) {
    FVector f;
    for_each_clique_position(g, -1, [&](const std::vector<int>& pos) {
        size_t dim = pos.size() - 1;
        if (f.counts.size() <= dim) f.counts.resize(dim + 1, 0);
        f.counts[dim] = checked_add(f.counts[dim], 1);
    });
    return f;
}

/// Euler characteristic of the Whitney complex: sum_k (-1)^k f_k.
inline long long euler_characteristic(const Graph& g) {
    FVector f = f_vector(g);
    long long chi = 0;
    for (size_t k = 0; k < f.counts.size(); ++k)
        chi = (k % 2 == 0) ? checked_add(chi, f.counts[k]) : checked_sub(chi, f.counts[k]);
    return chi;
}

/// Induced subgraph on the neighbors of v, ids preserved.
inline Graph unit_sphere(const Graph& g, int v) {
    return g.induced_mask(g.neighbors_at(g.position_of(v)));
}

/// Induced subgraph on an id set (need not be sorted), ids preserved.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& ids) {
    Bits keep(g.order());
    for (int v : ids) keep.set(g.position_of(v));
    return g.induced_mask(keep);
}

}  // namespace curv
