#pragma once

#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "curv/canonical.hpp"
#include "curv/graph.hpp"

namespace curv {

// Thrown when a recursion exceeds its node budget: the answer is undecided,
// never wrong.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

enum class PunctureMode {
    FirstVertex,  // test only the smallest vertex (cheap; equivalent on actual spheres)
    AnyVertex,    // test every vertex until one works
};

struct TopologyOptions {
    long long node_budget = 50'000'000;
    bool memoize = true;
    PunctureMode puncture = PunctureMode::FirstVertex;
};

struct TopologyReport {
    enum class Kind { Contractible, DSphere, DGraph, None };
    Kind kind = Kind::None;
    int dim = 0;
    bool holds = false;
    std::vector<int> collapse_order;  // witness when contractibility was established
    int failing_vertex = -1;          // first vertex whose unit sphere failed a check
    long long nodes_used = 0;
};

namespace detail {

struct ContractibleEntry {
    bool value = false;
    std::vector<int> witness;  // collapse order in canonical positions
};

struct CertKey {
    int n;
    std::vector<uint64_t> bits;
    bool operator==(const CertKey& o) const { return n == o.n && bits == o.bits; }
};

struct CertKeyHash {
    size_t operator()(const CertKey& k) const {
        uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(k.n);
        for (uint64_t w : k.bits) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

struct SphereKey {
    CertKey cert;
    int d;
    int mode;
    bool operator==(const SphereKey& o) const {
        return d == o.d && mode == o.mode && cert == o.cert;
    }
};

struct SphereKeyHash {
    size_t operator()(const SphereKey& k) const {
        return CertKeyHash{}(k.cert) * 31 + static_cast<size_t>(k.d) * 7 +
               static_cast<size_t>(k.mode);
    }
};

// Shared memo. Inserts are idempotent (a key always maps to one value), so a
// single lock around each access is all the coordination concurrent callers need.
class TopologyCache {
public:
    static TopologyCache& instance() {
        static TopologyCache cache;
        return cache;
    }

    std::optional<ContractibleEntry> find_contractible(const CertKey& k) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = contractible_.find(k);
        if (it == contractible_.end()) return std::nullopt;
        return it->second;
    }
    void store_contractible(const CertKey& k, ContractibleEntry e) {
        std::lock_guard<std::mutex> lock(mu_);
        contractible_.emplace(k, std::move(e));
    }

    std::optional<bool> find_sphere(const SphereKey& k) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = sphere_.find(k);
        if (it == sphere_.end()) return std::nullopt;
        return it->second;
    }
    void store_sphere(const SphereKey& k, bool v) {
        std::lock_guard<std::mutex> lock(mu_);
        sphere_.emplace(k, v);
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        contractible_.clear();
        sphere_.clear();
    }

private:
    std::mutex mu_;
    std::unordered_map<CertKey, ContractibleEntry, CertKeyHash> contractible_;
    std::unordered_map<SphereKey, bool, SphereKeyHash> sphere_;
};

struct TopologyCtx {
    const TopologyOptions& opt;
    long long nodes = 0;

    void tick() {
        if (++nodes > opt.node_budget)
            throw budget_exceeded("undecided-budget: topology recursion exceeded " +
                                  std::to_string(opt.node_budget) + " nodes");
    }
};

// Recursive collapsibility. Witness (vertex ids, removal order) is filled on
// a true answer when requested. Memo entries carry the witness in canonical
// positions so it transfers to any isomorphic copy.
inline bool contractible_rec(const Graph& g, TopologyCtx& ctx, std::vector<int>* witness) {
    ctx.tick();
    int n = g.order();
    if (n == 0) return false;
    if (n == 1) {
        if (witness) *witness = {g.vertex_at(0)};
        return true;
    }
    // Every graph this recursion accepts has chi = 1 (induction over the
    // collapse: removing v changes chi by chi(S(v)) - 1 = 0). Exact pruning.
    if (euler_characteristic(g) != 1) return false;

    CanonicalForm cf;
    CertKey key;
    if (ctx.opt.memoize) {
        cf = canonical_form(g);
        key = CertKey{cf.n, cf.bits};
        if (auto hit = TopologyCache::instance().find_contractible(key)) {
            if (hit->value && witness) {
                std::vector<int> inv(n);
                for (int p = 0; p < n; ++p) inv[cf.perm[p]] = p;
                witness->clear();
                for (int c : hit->witness) witness->push_back(g.vertex_at(inv[c]));
            }
            return hit->value;
        }
    }

    bool value = false;
    std::vector<int> local_witness;
    for (int p = 0; p < n && !value; ++p) {
        Graph sphere = g.induced_mask(g.neighbors_at(p));
        if (sphere.order() == 0) continue;
        if (!contractible_rec(sphere, ctx, nullptr)) continue;
        std::vector<int> rest_witness;
        Graph rest = g.without_vertex(g.vertex_at(p));
        if (contractible_rec(rest, ctx, witness || ctx.opt.memoize ? &rest_witness : nullptr)) {
            value = true;
            local_witness.push_back(g.vertex_at(p));
            local_witness.insert(local_witness.end(), rest_witness.begin(), rest_witness.end());
        }
    }

    if (ctx.opt.memoize) {
        ContractibleEntry entry;
        entry.value = value;
        if (value)
            for (int id : local_witness) entry.witness.push_back(cf.perm[g.position_of(id)]);
        TopologyCache::instance().store_contractible(key, std::move(entry));
    }
    if (value && witness) *witness = std::move(local_witness);
    return value;
}

inline bool dsphere_rec(const Graph& g, int d, TopologyCtx& ctx, int* failing_vertex) {
    ctx.tick();
    int n = g.order();
    if (d == -1) return n == 0;
    if (d == 0) return n == 2 && g.edge_count() == 0;
    if (n == 0) return false;
    // Spheres in this recursive class have chi = 1 + (-1)^d; exact pruning.
    if (euler_characteristic(g) != 1 + (d % 2 == 0 ? 1 : -1)) return false;
    if (!g.connected()) return false;

    CanonicalForm cf;
    SphereKey key;
    if (ctx.opt.memoize) {
        cf = canonical_form(g);
        key = SphereKey{CertKey{cf.n, cf.bits}, d, static_cast<int>(ctx.opt.puncture)};
        if (auto hit = TopologyCache::instance().find_sphere(key)) return *hit;
    }

    bool value = true;
    for (int p = 0; p < n && value; ++p) {
        Graph sphere = g.induced_mask(g.neighbors_at(p));
        if (!dsphere_rec(sphere, d - 1, ctx, nullptr)) {
            value = false;
            if (failing_vertex) *failing_vertex = g.vertex_at(p);
        }
    }
    if (value) {
        if (ctx.opt.puncture == PunctureMode::FirstVertex) {
            value = contractible_rec(g.without_vertex(g.vertex_at(0)), ctx, nullptr);
            if (!value && failing_vertex) *failing_vertex = g.vertex_at(0);
        } else {
            value = false;
            for (int p = 0; p < n && !value; ++p)
                value = contractible_rec(g.without_vertex(g.vertex_at(p)), ctx, nullptr);
        }
    }

    if (ctx.opt.memoize) TopologyCache::instance().store_sphere(key, value);
    return value;
}

}  // namespace detail

inline void clear_topology_cache() { detail::TopologyCache::instance().clear(); }

/// True iff g collapses to a point: some vertex has a contractible unit
/// sphere and its removal leaves a contractible graph. Witness = removal order.
inline bool is_contractible(const Graph& g, std::vector<int>* witness = nullptr,
                            const TopologyOptions& opt = {}) {
    detail::TopologyCtx ctx{opt};
    return detail::contractible_rec(g, ctx, witness);
}

/// Recursive sphere recognition. Base cases: the empty graph is the
/// (-1)-sphere, a 0-sphere is two isolated vertices; for d >= 1 every unit
/// sphere must be a (d-1)-sphere, the graph connected, and a puncture
/// contractible.
inline bool is_dsphere(const Graph& g, int d, const TopologyOptions& opt = {}) {
    detail::TopologyCtx ctx{opt};
    return detail::dsphere_rec(g, d, ctx, nullptr);
}

/// True iff g is nonempty, connected, and every unit sphere is a (d-1)-sphere.
inline bool is_dgraph(const Graph& g, int d, const TopologyOptions& opt = {}) {
    if (d < 1) throw std::invalid_argument("is_dgraph requires d >= 1");
    if (g.order() == 0 || !g.connected()) return false;
    detail::TopologyCtx ctx{opt};
    for (int p = 0; p < g.order(); ++p)
        if (!detail::dsphere_rec(g.induced_mask(g.neighbors_at(p)), d - 1, ctx, nullptr))
            return false;
    return true;
}

/// Replays a collapse order: each removed vertex must have a contractible
/// unit sphere at its removal time, down to a single vertex.
inline bool replay_collapse(const Graph& g, const std::vector<int>& order,
                            const TopologyOptions& opt = {}) {
    if (order.size() != static_cast<size_t>(g.order()) || g.order() == 0) return false;
    Graph cur = g;
    detail::TopologyCtx ctx{opt};
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        if (!cur.contains(order[i])) return false;
        Graph sphere = unit_sphere(cur, order[i]);
        if (!detail::contractible_rec(sphere, ctx, nullptr)) return false;
        cur = cur.without_vertex(order[i]);
    }
    return cur.order() == 1 && cur.vertex_at(0) == order.back();
}

inline TopologyReport check_contractible(const Graph& g, const TopologyOptions& opt = {}) {
    TopologyReport r;
    r.kind = TopologyReport::Kind::Contractible;
    detail::TopologyCtx ctx{opt};
    r.holds = detail::contractible_rec(g, ctx, &r.collapse_order);
    r.nodes_used = ctx.nodes;
    return r;
}

inline TopologyReport check_dsphere(const Graph& g, int d, const TopologyOptions& opt = {}) {
    TopologyReport r;
    r.kind = TopologyReport::Kind::DSphere;
    r.dim = d;
    detail::TopologyCtx ctx{opt};
    r.holds = detail::dsphere_rec(g, d, ctx, &r.failing_vertex);
    r.nodes_used = ctx.nodes;
    return r;
}

inline TopologyReport check_dgraph(const Graph& g, int d, const TopologyOptions& opt = {}) {
    TopologyReport r;
    r.kind = TopologyReport::Kind::DGraph;
    r.dim = d;
    detail::TopologyCtx ctx{opt};
    r.holds = g.order() > 0 && g.connected();
    if (r.holds)
        for (int p = 0; p < g.order() && r.holds; ++p)
            if (!detail::dsphere_rec(g.induced_mask(g.neighbors_at(p)), d - 1, ctx, nullptr)) {
                r.holds = false;
                r.failing_vertex = g.vertex_at(p);
            }
    r.nodes_used = ctx.nodes;
    return r;
}

}  // namespace curv
