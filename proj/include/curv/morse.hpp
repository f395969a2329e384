#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curv/graph.hpp"
#include "curv/rational.hpp"
#include "curv/rng.hpp"

namespace curv {

/// A scalar vertex function. Locally injective (distinct on adjacent
/// vertices) colorings are the discrete Morse functions everything here
/// expects; values are exact rationals so order comparisons never tie by
/// rounding.
struct Coloring {
    std::map<int, Rational> values;

    const Rational& at(int v) const {
        auto it = values.find(v);
        if (it == values.end())
            throw std::invalid_argument("coloring missing vertex " + std::to_string(v));
        return it->second;
    }
};

/// Integer Poincare-Hopf indices per vertex; entries sum to chi(G).
struct IndexVector {
    std::map<int, long long> indices;

    long long sum() const {
        long long s = 0;
        for (const auto& [v, i] : indices) s = checked_add(s, i);
        return s;
    }
};

/// Assignment of each simplex to one of its own vertices; the discrete
/// vector field whose divisor redistributes simplex energy to vertices.
struct FieldAssignment {
    std::vector<std::pair<Simplex, int>> choice;
};

inline void require_total(const Graph& g, const Coloring& f) {
    for (int v : g.vertices())
        if (!f.values.count(v))
            throw std::invalid_argument("coloring missing vertex " + std::to_string(v));
}

inline bool is_locally_injective(const Graph& g, const Coloring& f) {
    require_total(g, f);
    for (int p = 0; p < g.order(); ++p) {
        int u = g.vertex_at(p);
        const Bits& row = g.neighbors_at(p);
        for (int q = row.find_next(p); q != Bits::npos; q = row.find_next(q))
            if (f.at(u) == f.at(g.vertex_at(q))) return false;
    }
    return true;
}

inline void require_locally_injective(const Graph& g, const Coloring& f) {
    if (!is_locally_injective(g, f))
        throw std::invalid_argument("ambiguous level: coloring not locally injective");
}

/// Poincare-Hopf index i_f(v) = 1 - chi(S^-), where S^- is the part of the
/// unit sphere with smaller value.
inline long long ph_index(const Graph& g, const Coloring& f, int v) {
    require_locally_injective(g, f);
    int pv = g.position_of(v);
    const Rational& level = f.at(v);
    Bits below(g.order());
    const Bits& row = g.neighbors_at(pv);
    for (int q = row.find_first(); q != Bits::npos; q = row.find_next(q))
        if (f.at(g.vertex_at(q)) < level) below.set(q);
    return checked_sub(1, euler_characteristic(g.induced_mask(below)));
}

// Precomputed per-vertex sphere cliques for evaluating many colorings on one
// graph. index_at consumes a rank array (rank[pos] = position of the vertex
// in increasing value order); indices depend only on that order type.
class IndexEvaluator {
public:
    explicit IndexEvaluator(const Graph& g) : g_(&g) {
        int n = g.order();
        offsets_.assign(n + 1, 0);
        std::vector<std::vector<std::pair<int, std::vector<int>>>> per_vertex(n);
        for (int p = 0; p < n; ++p) {
            Graph sphere = g.induced_mask(g.neighbors_at(p));
            for_each_clique_position(sphere, -1, [&](const std::vector<int>& pos) {
                std::vector<int> members;
                members.reserve(pos.size());
                for (int sp : pos) members.push_back(g.position_of(sphere.vertex_at(sp)));
                int sign = (pos.size() % 2 == 1) ? 1 : -1;  // (-1)^dim
                per_vertex[p].push_back({sign, std::move(members)});
            });
        }
        for (int p = 0; p < n; ++p) offsets_[p + 1] = offsets_[p] + static_cast<int>(per_vertex[p].size());
        signs_.reserve(offsets_[n]);
        members_.reserve(offsets_[n]);
        for (int p = 0; p < n; ++p)
            for (auto& [sign, members] : per_vertex[p]) {
                signs_.push_back(static_cast<int8_t>(sign));
                members_.push_back(std::move(members));
            }
    }

    const Graph& graph() const { return *g_; }

    int index_at(int pos, const std::vector<int>& rank) const {
        int r = rank[pos];
        int chi_below = 0;
        for (int c = offsets_[pos]; c < offsets_[pos + 1]; ++c) {
            bool all_below = true;
            for (int m : members_[c])
                if (rank[m] >= r) {
                    all_below = false;
                    break;
                }
            if (all_below) chi_below += signs_[c];
        }
        return 1 - chi_below;
    }

    std::vector<int> index_all(const std::vector<int>& rank) const {
        std::vector<int> out(g_->order());
        for (int p = 0; p < g_->order(); ++p) out[p] = index_at(p, rank);
        return out;
    }

private:
    const Graph* g_;
    std::vector<int> offsets_;
    std::vector<int8_t> signs_;
    std::vector<std::vector<int>> members_;
};

/// Positional rank array of a total coloring: rank_of(g,f)[pos] = how many
/// vertices have strictly smaller value (requires local injectivity for
/// well-defined comparisons on neighborhoods; globally ties are broken by id).
inline std::vector<int> rank_of(const Graph& g, const Coloring& f) {
    require_total(g, f);
    int n = g.order();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Rational& fa = f.at(g.vertex_at(a));
        const Rational& fb = f.at(g.vertex_at(b));
        if (fa != fb) return fa < fb;
        return a < b;
    });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    return rank;
}

inline IndexVector index_vector(const Graph& g, const Coloring& f) {
    require_locally_injective(g, f);
    IndexEvaluator eval(g);
    std::vector<int> rank = rank_of(g, f);
    IndexVector out;
    for (int p = 0; p < g.order(); ++p) out.indices[g.vertex_at(p)] = eval.index_at(p, rank);
    return out;
}

inline Coloring negate(const Coloring& f) {
    Coloring out;
    for (const auto& [v, x] : f.values) out.values[v] = -x;
    return out;
}

/// Symmetric index j_f(v) = (i_f(v) + i_{-f}(v)) / 2, an exact half-integer.
inline Rational symmetric_index(const Graph& g, const Coloring& f, int v) {
    return Rational(ph_index(g, f, v) + ph_index(g, negate(f), v), 2);
}

/// Divisor of a vector field: each simplex sends (-1)^dim to its assigned
/// vertex. Entries always sum to chi(G).
inline IndexVector divisor_from_field(const Graph& g, const FieldAssignment& a) {
    std::vector<Simplex> expected = cliques(g);
    std::vector<Simplex> given;
    given.reserve(a.choice.size());
    for (const auto& [s, v] : a.choice) {
        if (!std::binary_search(s.verts.begin(), s.verts.end(), v))
            throw std::invalid_argument("field assignment: chosen vertex " + std::to_string(v) +
                                        " not in its simplex");
        given.push_back(s);
    }
    std::sort(given.begin(), given.end());
    std::sort(expected.begin(), expected.end());
    if (given != expected)
        throw std::invalid_argument("field assignment must cover every simplex exactly once");

    IndexVector out;
    for (int v : g.vertices()) out.indices[v] = 0;
    for (const auto& [s, v] : a.choice) {
        long long w = (s.dim() % 2 == 0) ? 1 : -1;
        out.indices[v] = checked_add(out.indices[v], w);
    }
    return out;
}

/// The gradient-like field of a coloring: every simplex points at its
/// f-maximal vertex. Its divisor reproduces index_vector(g, f).
inline FieldAssignment field_from_max(const Graph& g, const Coloring& f) {
    require_locally_injective(g, f);
    FieldAssignment a;
    for (Simplex& s : cliques(g)) {
        int best = s.verts[0];
        for (int v : s.verts)
            if (f.at(v) > f.at(best)) best = v;
        a.choice.push_back({std::move(s), best});
    }
    return a;
}

/// Uniformly random vertex ordering as a coloring with values 0..n-1;
/// deterministic per seed.
inline Coloring random_coloring(const Graph& g, uint64_t seed) {
    SeededRng rng(seed);
    std::vector<int> perm = rng.permutation(g.order());
    Coloring f;
    for (int p = 0; p < g.order(); ++p) f.values[g.vertex_at(p)] = perm[p];
    return f;
}

inline Coloring coloring_from_rank(const Graph& g, const std::vector<int>& rank) {
    Coloring f;
    for (int p = 0; p < g.order(); ++p) f.values[g.vertex_at(p)] = rank[p];
    return f;
}

}  // namespace curv
