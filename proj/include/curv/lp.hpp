#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "curv/curvature.hpp"
#include "curv/geodesy.hpp"
#include "curv/graph.hpp"
#include "curv/morse.hpp"
#include "curv/rational.hpp"
#include "curv/rng.hpp"
#include "curv/topology.hpp"
#include "curv/wheel.hpp"

namespace curv {

enum class CurvatureMode { Euler, Sectional };

namespace detail {

// Restricted wheel index from a rank array: 1 minus the number of maximal
// below-center boundary arcs; 1 when the whole boundary lies below.
inline long long wheel_index_from_rank(const std::vector<int>& boundary_pos, int center_rank,
                                       const std::vector<int>& rank) {
    int len = static_cast<int>(boundary_pos.size());
    int arcs = 0;
    bool all = true;
    for (int i = 0; i < len; ++i) {
        bool b = rank[boundary_pos[i]] < center_rank;
        bool prev = rank[boundary_pos[(i + len - 1) % len]] < center_rank;
        if (!b) all = false;
        if (b && !prev) ++arcs;
    }
    return all ? 1 : 1 - arcs;
}

}  // namespace detail

/// Constraint matrix of the positive-curvature LP: rows are sites (vertices
/// in Euler mode, geodesic wheels in sectional mode), columns are pool
/// colorings, entries are integer indices. Columns are deduplicated, so two
/// colorings with identical index rows share one column.
struct IndexMatrix {
    CurvatureMode mode = CurvatureMode::Euler;
    std::vector<std::string> sites;
    std::vector<std::vector<long long>> cols;  // cols[j][s]
    std::vector<Coloring> pool;                // representative coloring per column

    int site_count() const { return sites.empty() ? 0 : static_cast<int>(sites.size()); }
    int col_count() const { return static_cast<int>(cols.size()); }
};

inline IndexMatrix build_index_matrix(const Graph& g, const std::vector<Coloring>& pool,
                                      CurvatureMode mode,
                                      const std::vector<WheelEmbedding>* wheels = nullptr) {
    if (pool.empty()) throw std::invalid_argument("index matrix needs a nonempty coloring pool");
    IndexMatrix m;
    m.mode = mode;
    long long chi = 0;
    if (mode == CurvatureMode::Euler) {
        chi = euler_characteristic(g);
        for (int v : g.vertices()) m.sites.push_back(std::to_string(v));
    } else {
        if (!wheels || wheels->empty())
            throw std::invalid_argument("sectional mode needs a nonempty wheel list");
        for (const auto& w : *wheels) {
            validate_wheel(g, w);
            std::string s = std::to_string(w.center) + ":";
            for (size_t i = 0; i < w.boundary.size(); ++i)
                s += (i ? "-" : "") + std::to_string(w.boundary[i]);
            m.sites.push_back(std::move(s));
        }
    }

    std::optional<IndexEvaluator> eval;
    std::vector<int> centers;
    std::vector<std::vector<int>> boundaries;
    if (mode == CurvatureMode::Euler) {
        eval.emplace(g);
    } else {
        for (const auto& w : *wheels) {
            centers.push_back(g.position_of(w.center));
            std::vector<int> bp;
            for (int b : w.boundary) bp.push_back(g.position_of(b));
            boundaries.push_back(std::move(bp));
        }
    }

    std::map<std::vector<long long>, int> seen;
    for (const Coloring& f : pool) {
        require_locally_injective(g, f);
        std::vector<int> rank = rank_of(g, f);
        std::vector<long long> col;
        if (mode == CurvatureMode::Euler) {
            long long sum = 0;
            for (int p = 0; p < g.order(); ++p) {
                col.push_back(eval->index_at(p, rank));
                sum += col.back();
            }
            if (sum != chi)
                throw std::logic_error("index column does not sum to chi; evaluator corrupt");
        } else {
            for (size_t s = 0; s < centers.size(); ++s)
                col.push_back(detail::wheel_index_from_rank(boundaries[s], rank[centers[s]], rank));
        }
        if (seen.emplace(col, m.col_count()).second) {
            m.cols.push_back(std::move(col));
            m.pool.push_back(f);
        }
    }
    return m;
}

enum class LpStatus { Positive, NonpositiveOptimal, UnboundedError };

/// Optimum of max t s.t. A w >= t*1, sum w = 1, w >= 0, with a dual vector
/// certifying optimality: dual >= 0, sum dual = 1, dual^T A <= t_star.
struct LPSolution {
    LpStatus status = LpStatus::NonpositiveOptimal;
    Rational t_star;
    std::vector<Rational> weights;  // over columns
    std::vector<Rational> dual;     // over sites
    long long pivots = 0;
};

namespace detail {

struct GameResult {
    Rational value;
    std::vector<Rational> w;  // maximizer mix over columns
    std::vector<Rational> u;  // minimizer mix over rows (sites)
    long long pivots = 0;
    bool unbounded = false;
};

// Dense exact two-phase simplex with Bland's rule on the maximin LP.
// Tableau variables: [w_0..w_{n-1}, u, v, s_0..s_{m-1}, a]; site rows are
// stored negated so each slack s_i starts basic; one artificial a covers the
// sum row.
inline GameResult solve_game(const std::vector<std::vector<Rational>>& cols, int m,
                             long long pivot_budget) {
    int n = static_cast<int>(cols.size());
    int rows = m + 1;
    int nw = n, cu = n, cv = n + 1, cs = n + 2, ca = n + 2 + m;
    int ncols = ca + 1;
    int rhs = ncols;

    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(ncols + 1, Rational(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = -cols[j][i];
        t[i][cu] = 1;
        t[i][cv] = -1;
        t[i][cs + i] = 1;
    }
    for (int j = 0; j < n; ++j) t[m][j] = 1;
    t[m][ca] = 1;
    t[m][rhs] = 1;

    std::vector<int> basis(rows);
    for (int i = 0; i < m; ++i) basis[i] = cs + i;
    basis[m] = ca;

    std::vector<Rational> z(ncols + 1, Rational(0));
    GameResult result;

    auto pivot = [&](int r, int c) {
        Rational p = t[r][c];
        for (auto& x : t[r])
            if (x != 0) x /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rational factor = t[i][c];
            for (int j = 0; j <= ncols; ++j) {
                const Rational& prj = t[r][j];
                if (prj != 0) t[i][j] -= factor * prj;
            }
        }
        if (z[c] != 0) {
            Rational factor = z[c];
            for (int j = 0; j <= ncols; ++j) {
                const Rational& prj = t[r][j];
                if (prj != 0) z[j] -= factor * prj;
            }
        }
        basis[r] = c;
        ++result.pivots;
        if (result.pivots > pivot_budget)
            throw budget_exceeded("simplex exceeded pivot budget of " +
                                  std::to_string(pivot_budget));
    };

    // Dantzig pricing by default; a degenerate streak switches to Bland's
    // rule, whose smallest-index pivots cannot cycle, until the objective
    // moves again. Exact arithmetic keeps every comparison unambiguous.
    auto run = [&](int eligible_limit) {
        int stalled = 0;
        while (true) {
            bool bland = stalled >= 32;
            int enter = -1;
            for (int j = 0; j < eligible_limit; ++j) {
                if (z[j] <= 0) continue;
                if (bland) {
                    enter = j;
                    break;
                }
                if (enter < 0 || z[j] > z[enter]) enter = j;
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best_ratio;
            for (int r = 0; r < rows; ++r) {
                if (t[r][enter] <= 0) continue;
                Rational ratio = t[r][rhs] / t[r][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded
            pivot(leave, enter);
            stalled = (best_ratio == 0) ? stalled + 1 : 0;
        }
    };

    // Phase 1: drive out the artificial. Initial reduced costs are the sum
    // row itself (phase objective: max -a).
    for (int j = 0; j < ncols; ++j) z[j] = t[m][j];
    z[ca] = 0;
    z[rhs] = t[m][rhs];
    if (!run(ca)) {
        result.unbounded = true;
        return result;
    }
    if (z[rhs] != 0) throw std::logic_error("maximin LP reported infeasible; formulation corrupt");
    for (int r = 0; r < rows; ++r) {
        if (basis[r] != ca) continue;
        for (int j = 0; j < ca; ++j)
            if (t[r][j] != 0) {
                pivot(r, j);
                break;
            }
    }

    // Phase 2: true objective u - v.
    auto cost = [&](int j) -> Rational {
        if (j == cu) return 1;
        if (j == cv) return -1;
        return 0;
    };
    for (int j = 0; j <= ncols; ++j) {
        Rational acc = (j < ncols) ? cost(j) : Rational(0);
        for (int r = 0; r < rows; ++r) {
            Rational cb = cost(basis[r]);
            if (cb != 0) acc -= cb * t[r][j];
        }
        z[j] = acc;
    }
    if (!run(ca)) {
        result.unbounded = true;
        return result;
    }

    result.value = -z[rhs];
    result.w.assign(n, Rational(0));
    for (int r = 0; r < rows; ++r)
        if (basis[r] < n) result.w[basis[r]] = t[r][rhs];
    result.u.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) result.u[i] = -z[cs + i];
    return result;
}

}  // namespace detail

inline LPSolution solve_maximin(const IndexMatrix& a, long long pivot_budget = 500000) {
    int m = a.site_count();
    int n = a.col_count();
    if (m == 0 || n == 0) throw std::invalid_argument("maximin LP needs sites and columns");

    LPSolution sol;
    if (m <= n) {
        std::vector<std::vector<Rational>> cols(n, std::vector<Rational>(m));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i) cols[j][i] = a.cols[j][i];
        detail::GameResult r = detail::solve_game(cols, m, pivot_budget);
        if (r.unbounded) {
            sol.status = LpStatus::UnboundedError;
            return sol;
        }
        sol.t_star = r.value;
        sol.weights = std::move(r.w);
        sol.dual = std::move(r.u);
        sol.pivots = r.pivots;
    } else {
        // More sites than columns: solve the transposed game on -A^T, whose
        // primal mix is our dual and vice versa, at value -t_star.
        std::vector<std::vector<Rational>> cols(m, std::vector<Rational>(n));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) cols[i][j] = -a.cols[j][i];
        detail::GameResult r = detail::solve_game(cols, n, pivot_budget);
        if (r.unbounded) {
            sol.status = LpStatus::UnboundedError;
            return sol;
        }
        sol.t_star = -r.value;
        sol.weights = std::move(r.u);
        sol.dual = std::move(r.w);
        sol.pivots = r.pivots;
    }
    sol.status = sol.t_star > 0 ? LpStatus::Positive : LpStatus::NonpositiveOptimal;
    return sol;
}

struct CertificateCheck {
    bool ok = false;
    std::string failure;
};

/// Independent recheck of an LPSolution in exact arithmetic: primal
/// feasibility, the reported value, dual feasibility, and the weak-duality
/// equality. Accepts nothing it cannot reproduce.
inline CertificateCheck verify_certificate(const IndexMatrix& a, const LPSolution& sol) {
    CertificateCheck c;
    int m = a.site_count();
    int n = a.col_count();
    if (sol.status == LpStatus::UnboundedError) {
        c.failure = "solver reported unbounded";
        return c;
    }
    if (static_cast<int>(sol.weights.size()) != n || static_cast<int>(sol.dual.size()) != m) {
        c.failure = "certificate size mismatch";
        return c;
    }
    Rational wsum = 0;
    for (const Rational& w : sol.weights) {
        if (w < 0) {
            c.failure = "primal weight negative";
            return c;
        }
        wsum += w;
    }
    if (wsum != 1) {
        c.failure = "primal weights do not sum to 1";
        return c;
    }
    std::vector<Rational> aw(m, Rational(0));
    for (int j = 0; j < n; ++j)
        if (sol.weights[j] != 0)
            for (int i = 0; i < m; ++i) aw[i] += sol.weights[j] * a.cols[j][i];
    Rational min_site = aw[0];
    for (const Rational& x : aw) min_site = std::min(min_site, x);
    if (min_site != sol.t_star) {
        c.failure = "primal value mismatch";
        return c;
    }
    Rational ysum = 0;
    for (const Rational& y : sol.dual) {
        if (y < 0) {
            c.failure = "dual infeasible (negative)";
            return c;
        }
        ysum += y;
    }
    if (ysum != 1) {
        c.failure = "dual weights do not sum to 1";
        return c;
    }
    for (int j = 0; j < n; ++j) {
        Rational ya = 0;
        for (int i = 0; i < m; ++i) ya += sol.dual[i] * a.cols[j][i];
        if (ya > sol.t_star) {
            c.failure = "dual infeasible";
            return c;
        }
    }
    Rational yaw = 0;
    for (int i = 0; i < m; ++i) yaw += sol.dual[i] * aw[i];
    if (yaw != sol.t_star) {
        c.failure = "weak duality gap";
        return c;
    }
    c.ok = true;
    return c;
}

namespace detail {

inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t x = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

// Greedy sweep order from a start vertex: grow a set one vertex at a time,
// preferring vertices whose already-added sphere part looks contractible
// (chi = 1), so most interior vertices pick up index 0. Falls back to plain
// BFS order on large graphs.
inline std::vector<int> sweep_rank(const Graph& g, int start_pos) {
    int n = g.order();
    std::vector<int> rank(n, -1);
    if (n > 128) {
        std::vector<int> depth(n, -1);
        std::vector<int> queue = {start_pos};
        depth[start_pos] = 0;
        size_t head = 0;
        int next_rank = 0;
        rank[start_pos] = next_rank++;
        while (head < queue.size()) {
            int p = queue[head++];
            const Bits& row = g.neighbors_at(p);
            for (int q = row.find_first(); q != Bits::npos; q = row.find_next(q))
                if (depth[q] < 0) {
                    depth[q] = depth[p] + 1;
                    rank[q] = next_rank++;
                    queue.push_back(q);
                }
        }
        for (int p = 0; p < n; ++p)
            if (rank[p] < 0) rank[p] = next_rank++;
        return rank;
    }

    Bits added(n);
    added.set(start_pos);
    rank[start_pos] = 0;
    for (int step = 1; step < n; ++step) {
        int best = -1;
        long long best_score = 0;
        for (int u = 0; u < n; ++u) {
            if (added.test(u)) continue;
            Bits overlap = g.neighbors_at(u) & added;
            if (overlap.none()) continue;
            long long chi = euler_characteristic(g.induced_mask(overlap));
            long long score = chi >= 1 ? chi - 1 : 1 - chi;
            if (best < 0 || score < best_score) {
                best = u;
                best_score = score;
            }
        }
        if (best < 0)
            for (int u = 0; u < n && best < 0; ++u)
                if (!added.test(u)) best = u;
        added.set(best);
        rank[best] = step;
    }
    return rank;
}

// Site evaluation bundle shared by pricing: computes per-site indices from a
// rank array and knows which sites an adjacent-rank swap can touch.
struct SiteEval {
    const Graph* g;
    const IndexEvaluator* eval;  // Euler mode only; may be null otherwise
    CurvatureMode mode;
    const std::vector<WheelEmbedding>* wheels;
    std::vector<int> wheel_center_pos;
    std::vector<std::vector<int>> wheel_boundary_pos;
    std::vector<std::vector<int>> wheels_of_center;

    SiteEval(const Graph& graph, const IndexEvaluator* evaluator, CurvatureMode m,
             const std::vector<WheelEmbedding>* ws)
        : g(&graph), eval(evaluator), mode(m), wheels(ws) {
        if (mode == CurvatureMode::Sectional) {
            wheels_of_center.assign(graph.order(), {});
            for (size_t k = 0; k < ws->size(); ++k) {
                const auto& w = (*ws)[k];
                wheel_center_pos.push_back(graph.position_of(w.center));
                std::vector<int> bp;
                for (int b : w.boundary) bp.push_back(graph.position_of(b));
                wheel_boundary_pos.push_back(std::move(bp));
                wheels_of_center[wheel_center_pos.back()].push_back(static_cast<int>(k));
            }
        }
    }

    int site_count() const {
        return mode == CurvatureMode::Euler ? g->order() : static_cast<int>(wheels->size());
    }

    long long site_value(int s, const std::vector<int>& rank) const {
        if (mode == CurvatureMode::Euler) return eval->index_at(s, rank);
        return wheel_index_from_rank(wheel_boundary_pos[s], rank[wheel_center_pos[s]], rank);
    }

    // Sites whose value can change when the vertices at positions pu, pv swap
    // adjacent ranks (only the pu/pv comparison flips).
    void affected_sites(int pu, int pv, std::vector<int>& out) const {
        out.clear();
        if (mode == CurvatureMode::Euler) {
            out.push_back(pu);
            out.push_back(pv);
            return;
        }
        for (int k : wheels_of_center[pu])
            for (int b : wheel_boundary_pos[k])
                if (b == pv) {
                    out.push_back(k);
                    break;
                }
        for (int k : wheels_of_center[pv])
            for (int b : wheel_boundary_pos[k])
                if (b == pu) {
                    out.push_back(k);
                    break;
                }
    }
};

struct ClimbResult {
    std::vector<int> rank;
    Rational objective;
};

inline ClimbResult hill_climb(const SiteEval& se, const std::vector<Rational>& dual,
                              std::vector<int> rank, int max_passes) {
    int n = se.g->order();
    int sites = se.site_count();
    std::vector<int> order(n);
    for (int p = 0; p < n; ++p) order[rank[p]] = p;
    std::vector<long long> val(sites);
    Rational obj = 0;
    for (int s = 0; s < sites; ++s) {
        val[s] = se.site_value(s, rank);
        if (dual[s] != 0) obj += dual[s] * val[s];
    }
    std::vector<int> touched;
    for (int pass = 0; pass < max_passes; ++pass) {
        bool improved = false;
        for (int r = 0; r + 1 < n; ++r) {
            int pu = order[r], pv = order[r + 1];
            se.affected_sites(pu, pv, touched);
            if (touched.empty()) continue;
            std::swap(rank[pu], rank[pv]);
            Rational delta = 0;
            for (int s : touched)
                if (dual[s] != 0) delta += dual[s] * (se.site_value(s, rank) - val[s]);
            if (delta > 0) {
                order[r] = pv;
                order[r + 1] = pu;
                for (int s : touched) val[s] = se.site_value(s, rank);
                obj += delta;
                improved = true;
            } else {
                std::swap(rank[pu], rank[pv]);
            }
        }
        if (!improved) break;
    }
    return ClimbResult{std::move(rank), std::move(obj)};
}

}  // namespace detail

struct PricingOptions {
    uint64_t seed = 1;
    int restarts = 8;
    int max_passes = 60;
    int threads = 1;
};

struct PricedColumn {
    Coloring coloring;
    Rational objective;  // dual-weighted index sum
};

/// Column generation step: search vertex orderings maximizing the
/// dual-weighted index sum, by seeded restarts plus adjacent-transposition
/// hill climbing. Returns a coloring with reduced cost above t_star, or
/// nothing within the restart budget.
inline std::optional<PricedColumn> price_new_column(
    const Graph& g, const std::vector<Rational>& dual, CurvatureMode mode,
    const Rational& t_star, const PricingOptions& opt = {},
    const std::vector<WheelEmbedding>* wheels = nullptr, const IndexEvaluator* shared = nullptr) {
    int n = g.order();
    if (n == 0) return std::nullopt;
    bool all_zero = true;
    for (const Rational& y : dual)
        if (y != 0) all_zero = false;
    if (all_zero) return std::nullopt;

    std::optional<IndexEvaluator> local;
    if (!shared && mode == CurvatureMode::Euler) local.emplace(g);
    const IndexEvaluator* eval = shared ? shared : (local ? &*local : nullptr);
    detail::SiteEval se(g, eval, mode, wheels);

    // Start points: a sweep from the heaviest-dual vertex, the identity
    // order, then seeded random orders.
    auto start_rank = [&](int restart) -> std::vector<int> {
        if (restart == 0) {
            int best = 0;
            if (mode == CurvatureMode::Euler) {
                for (int s = 1; s < n; ++s)
                    if (dual[s] > dual[best]) best = s;
            } else {
                int best_site = 0;
                for (int s = 1; s < se.site_count(); ++s)
                    if (dual[s] > dual[best_site]) best_site = s;
                best = se.wheel_center_pos[best_site];
            }
            return detail::sweep_rank(g, best);
        }
        if (restart == 1) {
            std::vector<int> r(n);
            for (int p = 0; p < n; ++p) r[p] = p;
            return r;
        }
        SeededRng rng(detail::mix_seed(opt.seed, restart));
        return rng.permutation(n);
    };

    std::vector<detail::ClimbResult> results(opt.restarts);
    auto work = [&](int restart) {
        results[restart] = detail::hill_climb(se, dual, start_rank(restart), opt.max_passes);
    };
    if (opt.threads > 1) {
        std::vector<std::thread> threads;
        std::atomic<int> next{0};
        int nthreads = std::min(opt.threads, opt.restarts);
        for (int t = 0; t < nthreads; ++t)
            threads.emplace_back([&] {
                int r;
                while ((r = next.fetch_add(1)) < opt.restarts) work(r);
            });
        for (auto& t : threads) t.join();
    } else {
        for (int r = 0; r < opt.restarts; ++r) work(r);
    }

    int best = 0;
    for (int r = 1; r < opt.restarts; ++r)
        if (results[r].objective > results[best].objective) best = r;
    if (results[best].objective <= t_star) return std::nullopt;
    return PricedColumn{coloring_from_rank(g, results[best].rank), results[best].objective};
}

enum class SearchStatus { Positive, NonpositiveWithinPool, BudgetExhausted };

struct SearchOptions {
    CurvatureMode mode = CurvatureMode::Euler;
    uint64_t seed = 1;
    int rounds = 24;
    int random_pool = 32;
    int sweep_starts = -1;              // sweep colorings seeded (-1 = one per vertex)
    bool exhaustive_small_pool = true;  // seed with all orders when |V| <= 7
    PricingOptions pricing;
    long long pivot_budget = 2000000;
    int wheels_per_vertex = 4;
    int wheel_max_count = 10000;
    long long wheel_candidate_budget = 200000;
    int max_pool = 4096;
};

struct SearchReport {
    SearchStatus status = SearchStatus::BudgetExhausted;
    CurvatureMode mode = CurvatureMode::Euler;
    Rational t_star;
    Measure measure;
    LPSolution solution;
    IndexMatrix matrix;
    bool certificate_ok = false;
    int pool_size = 0;
    int rounds_used = 0;
    long long total_pivots = 0;
    std::vector<WheelEmbedding> wheels;
    Rational ceiling;  // chi/|V| bound on t_star, Euler mode
    bool has_ceiling = false;
    std::string note;
};

/// Orchestrates the positive-curvature search: seed a pool, solve the maximin
/// LP exactly, verify the certificate, price an improving coloring, repeat.
/// A Positive verdict is a theorem about g (the measure is in the report); a
/// nonpositive verdict only says no measure was found within the explored pool.
inline SearchReport positive_curvature_search(const Graph& g, const SearchOptions& opt = {}) {
    SearchReport report;
    report.mode = opt.mode;
    int n = g.order();
    if (n == 0) throw std::invalid_argument("search needs a nonempty graph");

    if (opt.mode == CurvatureMode::Sectional) {
        for (int v : g.vertices()) {
            WheelEnumeration we = enumerate_geodesic_wheels(g, v, opt.wheel_max_count,
                                                            WheelMode::Existential,
                                                            opt.wheel_candidate_budget);
            int kept = 0;
            for (auto& w : we.wheels) {
                if (kept++ >= opt.wheels_per_vertex) break;
                report.wheels.push_back(std::move(w));
            }
        }
        if (report.wheels.empty())
            throw std::invalid_argument("sectional search found no geodesic wheels");
    } else {
        report.ceiling = Rational(euler_characteristic(g), n);
        report.has_ceiling = true;
    }

    IndexEvaluator eval(g);

    std::vector<Coloring> pool;
    if (opt.exhaustive_small_pool && n <= 7) {
        std::vector<int> rank(n);
        for (int i = 0; i < n; ++i) rank[i] = i;
        do {
            pool.push_back(coloring_from_rank(g, rank));
        } while (std::next_permutation(rank.begin(), rank.end()));
    } else {
        int starts = opt.sweep_starts < 0 ? n : std::min(opt.sweep_starts, n);
        for (int k = 0; k < starts; ++k) {
            int p = static_cast<int>((static_cast<long long>(k) * n) / std::max(starts, 1));
            pool.push_back(coloring_from_rank(g, detail::sweep_rank(g, p)));
        }
        for (int r = 0; r < opt.random_pool; ++r)
            pool.push_back(random_coloring(g, detail::mix_seed(opt.seed, 1000 + r)));
    }

    const std::vector<WheelEmbedding>* wheels =
        opt.mode == CurvatureMode::Sectional ? &report.wheels : nullptr;

    try {
        for (int round = 0; round < opt.rounds; ++round) {
            report.rounds_used = round + 1;
            report.matrix = build_index_matrix(g, pool, opt.mode, wheels);
            report.solution = solve_maximin(report.matrix, opt.pivot_budget);
            report.total_pivots += report.solution.pivots;
            CertificateCheck check = verify_certificate(report.matrix, report.solution);
            if (!check.ok)
                throw std::logic_error("solver returned an unverifiable certificate: " +
                                       check.failure);
            report.certificate_ok = true;
            report.t_star = report.solution.t_star;
            report.pool_size = report.matrix.col_count();
            if (report.has_ceiling && report.t_star > report.ceiling)
                throw std::logic_error("Gauss-Bonnet ceiling violated; solver corrupt");

            if (static_cast<int>(pool.size()) >= opt.max_pool) {
                report.note = "pool cap reached";
                break;
            }
            PricingOptions popt = opt.pricing;
            popt.seed = detail::mix_seed(opt.seed, 2000 + round);
            auto priced = price_new_column(g, report.solution.dual, opt.mode, report.t_star, popt,
                                           wheels, &eval);
            if (!priced) break;  // optimal within everything pricing can reach
            pool.push_back(std::move(priced->coloring));
        }
        report.status = report.t_star > 0 ? SearchStatus::Positive
                                          : SearchStatus::NonpositiveWithinPool;
    } catch (const budget_exceeded& e) {
        report.status = SearchStatus::BudgetExhausted;
        report.note = e.what();
    }

    if (report.certificate_ok) {
        for (int j = 0; j < report.matrix.col_count(); ++j)
            if (report.solution.weights[j] != 0) {
                report.measure.support.push_back(report.matrix.pool[j]);
                report.measure.weights.push_back(report.solution.weights[j]);
            }
    }
    if (report.note.empty())
        report.note = report.status == SearchStatus::Positive
                          ? "certified positive-curvature measure over the explored pool"
                          : "no positive-curvature measure found within the explored pool; "
                            "this is not a nonexistence proof";
    return report;
}

}  // namespace curv
