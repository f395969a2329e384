#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "curv/graph.hpp"

namespace curv {

/// A center vertex plus a cyclically ordered boundary cycle inside its unit
/// sphere: the discrete stand-in for a geodesic 2-disc.
struct WheelEmbedding {
    int center = -1;
    std::vector<int> boundary;  // cyclic order; consecutive vertices adjacent

    bool operator==(const WheelEmbedding& o) const {
        return center == o.center && boundary == o.boundary;
    }
};

inline void validate_wheel(const Graph& g, const WheelEmbedding& w) {
    if (w.boundary.size() < 4)
        throw std::invalid_argument("not a wheel: boundary needs at least 4 vertices");
    std::set<int> seen(w.boundary.begin(), w.boundary.end());
    if (seen.size() != w.boundary.size())
        throw std::invalid_argument("not a wheel: repeated boundary vertex");
    if (seen.count(w.center))
        throw std::invalid_argument("not a wheel: center on the boundary");
    for (int c : w.boundary)
        if (!g.adjacent(w.center, c))
            throw std::invalid_argument("not a wheel: boundary vertex " + std::to_string(c) +
                                        " not adjacent to center " + std::to_string(w.center));
    int len = static_cast<int>(w.boundary.size());
    for (int i = 0; i < len; ++i) {
        int u = w.boundary[i];
        int v = w.boundary[(i + 1) % len];
        if (!g.adjacent(u, v))
            throw std::invalid_argument("not a wheel: boundary pair (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") not adjacent");
    }
}

}  // namespace curv
