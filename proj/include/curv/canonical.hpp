#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "curv/graph.hpp"

namespace curv {

// Canonical certificate of a graph up to isomorphism: the adjacency upper
// triangle under a canonical vertex order, found by color refinement plus
// individualization. Equal certificates imply isomorphic graphs; since every
// branch of the search is explored and the minimum kept, isomorphic graphs
// also produce equal certificates.
struct CanonicalForm {
    int n = 0;
    std::vector<uint64_t> bits;
    std::vector<int> perm;  // perm[pos] = canonical position of local position pos

    bool same_class(const CanonicalForm& o) const { return n == o.n && bits == o.bits; }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(n);
        for (uint64_t w : bits) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

namespace detail {

// One round of 1-dimensional color refinement; returns true if the
// partition split. Colors stay dense, ranks ordered by signature.
inline bool refine_step(const Graph& g, std::vector<int>& colors) {
    int n = g.order();
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int p = 0; p < n; ++p) {
        std::vector<int> s;
        s.push_back(colors[p]);
        const Bits& row = g.neighbors_at(p);
        for (int q = row.find_first(); q != Bits::npos; q = row.find_next(q))
            s.push_back(colors[q]);
        std::sort(s.begin() + 1, s.end());
        sig[p] = {std::move(s), p};
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a].first < sig[b].first; });
    std::vector<int> next(n);
    int color = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++color;
        next[order[i]] = color;
    }
    bool changed = next != colors;
    colors = std::move(next);
    return changed;
}

inline void refine(const Graph& g, std::vector<int>& colors) {
    while (refine_step(g, colors)) {
    }
}

inline std::vector<uint64_t> pack_upper_triangle(const Graph& g, const std::vector<int>& perm) {
    int n = g.order();
    std::vector<int> inv(n);
    for (int p = 0; p < n; ++p) inv[perm[p]] = p;
    int nbits = n * (n - 1) / 2;
    std::vector<uint64_t> bits((nbits + 63) / 64, 0);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            if (g.adjacent_at(inv[i], inv[j])) bits[idx >> 6] |= uint64_t{1} << (idx & 63);
    return bits;
}

inline void canonical_search(const Graph& g, std::vector<int> colors, CanonicalForm& best,
                             bool& have_best) {
    int n = g.order();
    refine(g, colors);

    // Target the smallest non-singleton class (fewest branches).
    std::vector<int> class_size(n, 0);
    for (int c : colors) ++class_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (class_size[c] >= 2 && (target < 0 || class_size[c] < class_size[target])) target = c;

    if (target < 0) {
        // Discrete partition: colors are a permutation.
        std::vector<uint64_t> bits = pack_upper_triangle(g, colors);
        if (!have_best || bits < best.bits) {
            best.n = n;
            best.bits = std::move(bits);
            best.perm = colors;
            have_best = true;
        }
        return;
    }
    for (int p = 0; p < n; ++p) {
        if (colors[p] != target) continue;
        std::vector<int> child = colors;
        child[p] = n;  // fresh color, refined to dense ranks on recursion
        canonical_search(g, std::move(child), best, have_best);
    }
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    CanonicalForm best;
    if (g.order() == 0) return best;
    bool have_best = false;
    detail::canonical_search(g, std::vector<int>(g.order(), 0), best, have_best);
    return best;
}

}  // namespace curv
