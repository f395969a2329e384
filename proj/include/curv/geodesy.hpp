#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "curv/curvature.hpp"
#include "curv/graph.hpp"
#include "curv/morse.hpp"
#include "curv/rational.hpp"
#include "curv/wheel.hpp"

namespace curv {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

/// All-pairs hop distances inside the unit sphere of x; kUnreachable marks
/// disconnected pairs.
struct SphereDistances {
    std::vector<int> ids;  // sphere vertex ids, ascending
    std::vector<std::vector<int>> dist;

    int position(int id) const {
        auto it = std::lower_bound(ids.begin(), ids.end(), id);
        if (it == ids.end() || *it != id)
            throw std::invalid_argument("vertex " + std::to_string(id) + " not on the sphere");
        return static_cast<int>(it - ids.begin());
    }
};

inline SphereDistances sphere_distances(const Graph& g, int x) {
    Graph sphere = unit_sphere(g, x);
    int n = sphere.order();
    SphereDistances out;
    out.ids = sphere.vertices();
    out.dist.assign(n, std::vector<int>(n, kUnreachable));
    for (int s = 0; s < n; ++s) {
        out.dist[s][s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int p = q.front();
            q.pop();
            const Bits& row = sphere.neighbors_at(p);
            for (int r = row.find_first(); r != Bits::npos; r = row.find_next(r))
                if (out.dist[s][r] == kUnreachable) {
                    out.dist[s][r] = out.dist[s][p] + 1;
                    q.push(r);
                }
        }
    }
    return out;
}

enum class WheelMode { Existential, Universal };

/// Witnesses for a geodesic grand-circle decision; reproducible by
/// re-evaluating the distances it quotes.
struct GrandCircleReport {
    WheelEmbedding circle;
    WheelMode mode = WheelMode::Existential;
    bool geodesic = false;
    int witness_a = -1;
    int witness_b = -1;
    int max_on_circle = -1;  // max over c in C of d(a,c) + d(b,c)
    int max_on_sphere = -1;  // max over c in S(x) of the same
};

namespace detail {

// Max of d(a,.) + d(b,.) over the whole sphere; kUnreachable if any vertex
// is unreachable from a or b (a circle cannot sweep past a gap).
inline int sphere_pair_max(const SphereDistances& sd, int pa, int pb) {
    int best = 0;
    for (size_t c = 0; c < sd.ids.size(); ++c) {
        int da = sd.dist[pa][c];
        int db = sd.dist[pb][c];
        if (da >= kUnreachable || db >= kUnreachable) return kUnreachable;
        best = std::max(best, da + db);
    }
    return best;
}

}  // namespace detail

namespace detail {

inline GrandCircleReport check_geodesic_wheel(const Graph& g, const WheelEmbedding& w,
                                              WheelMode mode, const SphereDistances& sd) {
    GrandCircleReport report;
    report.circle = w;
    report.mode = mode;
    int len = static_cast<int>(w.boundary.size());
    std::vector<int> pos(len);
    for (int i = 0; i < len; ++i) pos[i] = sd.position(w.boundary[i]);

    auto arc_dist = [len](int i, int j) {
        int d = std::abs(i - j);
        return std::min(d, len - d);
    };

    for (int ia = 0; ia < len; ++ia) {
        int ib = (ia + 1) % len;
        int pa = pos[ia], pb = pos[ib];
        bool arcs_ok = true;
        int max_on_circle = 0;
        bool universal_ok = true;
        int max_on_sphere = sphere_pair_max(sd, pa, pb);
        if (max_on_sphere >= kUnreachable) continue;
        for (int ic = 0; ic < len && arcs_ok; ++ic) {
            int pc = pos[ic];
            if (sd.dist[pa][pc] != arc_dist(ia, ic) || sd.dist[pb][pc] != arc_dist(ib, ic)) {
                arcs_ok = false;
                break;
            }
            if (ic == ia || ic == ib) continue;
            int total = sd.dist[pa][pc] + sd.dist[pb][pc];
            max_on_circle = std::max(max_on_circle, total);
            if (total != max_on_sphere) universal_ok = false;
        }
        if (!arcs_ok) continue;
        if (max_on_circle != max_on_sphere) continue;
        if (mode == WheelMode::Universal && !universal_ok) continue;
        report.geodesic = true;
        report.witness_a = w.boundary[ia];
        report.witness_b = w.boundary[ib];
        report.max_on_circle = max_on_circle;
        report.max_on_sphere = max_on_sphere;
        return report;
    }
    return report;
}

}  // namespace detail

/// Decides whether a wheel is geodesic: some adjacent boundary pair (a,b)
/// must see every boundary vertex at its circle-arc distance (arcs realize
/// sphere geodesics), and the boundary must attain the sphere-wide maximum
/// of d(a,c) + d(b,c). Universal mode demands that every boundary vertex
/// other than a,b attains that maximum.
inline GrandCircleReport is_geodesic_wheel(const Graph& g, const WheelEmbedding& w,
                                           WheelMode mode = WheelMode::Existential) {
    validate_wheel(g, w);
    SphereDistances sd = sphere_distances(g, w.center);
    return detail::check_geodesic_wheel(g, w, mode, sd);
}

struct WheelEnumeration {
    std::vector<WheelEmbedding> wheels;
    bool truncated = false;
    long long cycles_examined = 0;
};

/// Deterministic enumeration of geodesic wheels centered at x: DFS over
/// cycles of the unit sphere in canonical vertex order (cycle starts at its
/// smallest vertex, orientation fixed), length capped at 2*diameter+1,
/// filtered by is_geodesic_wheel, truncated at max_count.
inline WheelEnumeration enumerate_geodesic_wheels(const Graph& g, int x, int max_count = 10000,
                                                  WheelMode mode = WheelMode::Existential,
                                                  long long candidate_budget = 1000000) {
    Graph sphere = unit_sphere(g, x);
    WheelEnumeration out;
    int n = sphere.order();
    if (n < 4) return out;

    SphereDistances sd = sphere_distances(g, x);  // shared across all candidates
    int diameter = 0;
    for (const auto& row : sd.dist)
        for (int d : row)
            if (d < kUnreachable) diameter = std::max(diameter, d);
    int max_len = std::min(n, 2 * diameter + 1);
    if (max_len < 4) return out;

    std::vector<int> path;
    std::vector<bool> used(n, false);

    auto emit = [&](const std::vector<int>& cycle) {
        WheelEmbedding w;
        w.center = x;
        for (int p : cycle) w.boundary.push_back(sphere.vertex_at(p));
        if (detail::check_geodesic_wheel(g, w, mode, sd).geodesic) {
            if (static_cast<int>(out.wheels.size()) >= max_count) {
                out.truncated = true;
                return false;
            }
            out.wheels.push_back(std::move(w));
        }
        return true;
    };

    // Cycles anchored at their minimal vertex s; orientation canonicalized by
    // requiring the second vertex to be smaller than the last.
    auto dfs = [&](auto&& self, int s, int cur) -> bool {
        const Bits& row = sphere.neighbors_at(cur);
        for (int nxt = row.find_first(); nxt != Bits::npos; nxt = row.find_next(nxt)) {
            if (nxt == s && path.size() >= 4) {
                if (path[1] < path.back()) {
                    ++out.cycles_examined;
                    if (out.cycles_examined > candidate_budget) {
                        out.truncated = true;
                        return false;
                    }
                    if (!emit(path)) return false;
                }
                continue;
            }
            if (nxt <= s || used[nxt]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            used[nxt] = true;
            path.push_back(nxt);
            bool keep_going = self(self, s, nxt);
            path.pop_back();
            used[nxt] = false;
            if (!keep_going) return false;
        }
        return true;
    };

    for (int s = 0; s < n; ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), false);
        used[s] = true;
        if (!dfs(dfs, s, s)) break;
    }
    return out;
}

/// Expected sign-change count per edge under a signed measure: the Crofton
/// weight p(u,v) = sum_j w_j [sign f_j(u) != sign f_j(v)].
inline std::vector<std::vector<Rational>> crofton_edge_weights(const Graph& g, const Measure& m) {
    validate_measure(g, m);
    int n = g.order();
    for (size_t j = 0; j < m.support.size(); ++j)
        for (int p = 0; p < n; ++p) {
            int v = g.vertex_at(p);
            if (g.degree_at(p) > 0 && m.support[j].at(v) == 0)
                throw std::invalid_argument("signed measure: coloring " + std::to_string(j) +
                                            " is zero at non-isolated vertex " +
                                            std::to_string(v) + "; sign change undefined");
        }
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, Rational(0)));
    for (size_t j = 0; j < m.support.size(); ++j) {
        const Coloring& f = m.support[j];
        for (int p = 0; p < n; ++p) {
            const Bits& row = g.neighbors_at(p);
            for (int q = row.find_next(p); q != Bits::npos; q = row.find_next(q)) {
                bool sp = f.at(g.vertex_at(p)) > 0;
                bool sq = f.at(g.vertex_at(q)) > 0;
                if (sp != sq) {
                    w[p][q] += m.weights[j];
                    w[q][p] += m.weights[j];
                }
            }
        }
    }
    return w;
}

/// Crofton pseudo-distance d(a,b) = min over paths of the expected number of
/// sign-changing edges; nullopt when a and b are disconnected.
inline std::optional<Rational> crofton_distance(const Graph& g, const Measure& m, int a, int b) {
    auto weights = crofton_edge_weights(g, m);
    int n = g.order();
    int pa = g.position_of(a), pb = g.position_of(b);
    std::vector<std::optional<Rational>> dist(n);
    std::vector<bool> done(n, false);
    dist[pa] = Rational(0);
    for (int iter = 0; iter < n; ++iter) {
        int best = -1;
        for (int p = 0; p < n; ++p)
            if (!done[p] && dist[p] && (best < 0 || *dist[p] < *dist[best])) best = p;
        if (best < 0) break;
        if (best == pb) return dist[best];
        done[best] = true;
        const Bits& row = g.neighbors_at(best);
        for (int q = row.find_first(); q != Bits::npos; q = row.find_next(q)) {
            Rational cand = *dist[best] + weights[best][q];
            if (!dist[q] || cand < *dist[q]) dist[q] = cand;
        }
    }
    return dist[pb];
}

/// Quotient by the d = 0 equivalence: zero-weight edge components collapse
/// to single vertices. Distances on the quotient form a metric.
struct QuotientResult {
    Graph quotient;                // vertices 0..k-1, ordered by smallest member
    std::vector<int> class_of;     // by position in g
};

inline QuotientResult kolmogorov_quotient(const Graph& g, const Measure& m) {
    auto weights = crofton_edge_weights(g, m);
    int n = g.order();
    QuotientResult out;
    out.class_of.assign(n, -1);
    int k = 0;
    for (int p = 0; p < n; ++p) {
        if (out.class_of[p] >= 0) continue;
        std::vector<int> stack = {p};
        out.class_of[p] = k;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            const Bits& row = g.neighbors_at(u);
            for (int q = row.find_first(); q != Bits::npos; q = row.find_next(q))
                if (out.class_of[q] < 0 && weights[u][q] == 0) {
                    out.class_of[q] = k;
                    stack.push_back(q);
                }
        }
        ++k;
    }
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < n; ++p) {
        const Bits& row = g.neighbors_at(p);
        for (int q = row.find_next(p); q != Bits::npos; q = row.find_next(q)) {
            int cu = out.class_of[p], cv = out.class_of[q];
            if (cu != cv) edges.push_back({std::min(cu, cv), std::max(cu, cv)});
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.quotient = Graph::on_vertices(k, edges);
    return out;
}

}  // namespace curv
