#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "curv/graph.hpp"
#include "curv/morse.hpp"
#include "curv/rational.hpp"
#include "curv/rng.hpp"
#include "curv/wheel.hpp"

namespace curv {

/// Finitely supported probability measure on colorings, exact weights.
struct Measure {
    std::vector<Coloring> support;
    std::vector<Rational> weights;
};

struct CurvatureVector {
    std::map<int, Rational> values;

    Rational sum() const {
        Rational s = 0;
        for (const auto& [v, x] : values) s += x;
        return s;
    }
};

inline void validate_measure(const Graph& g, const Measure& m) {
    if (m.support.empty()) throw std::invalid_argument("measure has empty support");
    if (m.support.size() != m.weights.size())
        throw std::invalid_argument("measure support/weight count mismatch");
    Rational total = 0;
    for (size_t j = 0; j < m.weights.size(); ++j) {
        if (m.weights[j] < 0)
            throw std::invalid_argument("measure weight " + std::to_string(j) + " is negative");
        total += m.weights[j];
    }
    if (total != 1)
        throw std::invalid_argument("measure weights sum to " + to_fraction_string(total) +
                                    ", expected 1");
    for (size_t j = 0; j < m.support.size(); ++j)
        if (!is_locally_injective(g, m.support[j]))
            throw std::invalid_argument("support coloring " + std::to_string(j) +
                                        " is not locally injective");
}

/// Dirac measure on a single coloring.
inline Measure dirac(Coloring f) {
    Measure m;
    m.support.push_back(std::move(f));
    m.weights.push_back(1);
    return m;
}

/// Index-expectation curvature K(v) = E_mu[i_f(v)]. Sums to chi(G) for every
/// valid measure (Poincare-Hopf plus Fubini).
inline CurvatureVector expectation_curvature(const Graph& g, const Measure& m) {
    validate_measure(g, m);
    IndexEvaluator eval(g);
    std::vector<Rational> acc(g.order(), Rational(0));
    for (size_t j = 0; j < m.support.size(); ++j) {
        std::vector<int> rank = rank_of(g, m.support[j]);
        for (int p = 0; p < g.order(); ++p) acc[p] += m.weights[j] * eval.index_at(p, rank);
    }
    CurvatureVector out;
    for (int p = 0; p < g.order(); ++p) out.values[g.vertex_at(p)] = acc[p];
    return out;
}

/// Combinatorial curvature K(v) = 1 - f_0(S(v))/2 + f_1(S(v))/3 - ...;
/// equal to the uniform index expectation.
inline Rational levitt_curvature(const Graph& g, int v) {
    FVector f = f_vector(unit_sphere(g, v));
    Rational k = 1;
    for (size_t i = 0; i < f.counts.size(); ++i) {
        Rational term(f.counts[i], static_cast<long long>(i) + 2);
        k += (i % 2 == 0) ? -term : term;
    }
    return k;
}

inline CurvatureVector levitt_vector(const Graph& g) {
    CurvatureVector out;
    for (int v : g.vertices()) out.values[v] = levitt_curvature(g, v);
    return out;
}

struct UniformOptions {
    int exhaustive_budget = 8;  // max |V| for exact enumeration of all orders
    bool allow_sampling = false;
    long long samples = 20000;
    uint64_t seed = 1;
};

struct UniformCurvature {
    CurvatureVector values;
    bool exact = true;
    long long samples = 0;
    std::map<int, double> std_error;  // per vertex, sampling mode only
};

/// Uniform index expectation: exact average over all |V|! vertex orders when
/// |V| fits the budget, otherwise a seeded Monte Carlo estimate (only when
/// sampling was requested; there is no silent fallback).
inline UniformCurvature uniform_curvature(const Graph& g, const UniformOptions& opt = {}) {
    int n = g.order();
    UniformCurvature out;
    if (n == 0) return out;
    IndexEvaluator eval(g);

    if (n <= opt.exhaustive_budget) {
        std::vector<int> rank(n);
        for (int i = 0; i < n; ++i) rank[i] = i;
        std::vector<long long> acc(n, 0);
        long long count = 0;
        do {
            for (int p = 0; p < n; ++p) acc[p] = checked_add(acc[p], eval.index_at(p, rank));
            ++count;
        } while (std::next_permutation(rank.begin(), rank.end()));
        for (int p = 0; p < n; ++p) out.values.values[g.vertex_at(p)] = Rational(acc[p], count);
        out.exact = true;
        return out;
    }

    if (!opt.allow_sampling)
        throw std::invalid_argument("graph exceeds exhaustive budget (" +
                                    std::to_string(opt.exhaustive_budget) +
                                    " vertices); enable sampling mode");
    SeededRng rng(opt.seed);
    std::vector<long long> acc(n, 0), acc2(n, 0);
    for (long long s = 0; s < opt.samples; ++s) {
        std::vector<int> rank = rng.permutation(n);
        for (int p = 0; p < n; ++p) {
            int i = eval.index_at(p, rank);
            acc[p] = checked_add(acc[p], i);
            acc2[p] = checked_add(acc2[p], static_cast<long long>(i) * i);
        }
    }
    for (int p = 0; p < n; ++p) {
        out.values.values[g.vertex_at(p)] = Rational(acc[p], opt.samples);
        double mean = static_cast<double>(acc[p]) / static_cast<double>(opt.samples);
        double var = static_cast<double>(acc2[p]) / static_cast<double>(opt.samples) - mean * mean;
        out.std_error[g.vertex_at(p)] =
            std::sqrt(std::max(0.0, var) / static_cast<double>(opt.samples));
    }
    out.exact = false;
    out.samples = opt.samples;
    return out;
}

struct GaussBonnetResult {
    bool ok = false;
    Rational residual;  // sum K - chi
};

inline GaussBonnetResult gauss_bonnet_check(const Graph& g, const CurvatureVector& k) {
    for (int v : g.vertices())
        if (!k.values.count(v))
            throw std::invalid_argument("curvature vector missing vertex " + std::to_string(v));
    GaussBonnetResult r;
    r.residual = k.sum() - euler_characteristic(g);
    r.ok = r.residual == 0;
    return r;
}

/// Index of f restricted to the wheel at its center: 1 - chi(S^-) inside the
/// wheel subgraph, i.e. 1 minus the number of maximal boundary arcs below the
/// center. A fully-below boundary is the whole circle (chi 0, index 1).
inline long long wheel_index(const Graph& g, const WheelEmbedding& w, const Coloring& f) {
    validate_wheel(g, w);
    const Rational& level = f.at(w.center);
    int len = static_cast<int>(w.boundary.size());
    std::vector<bool> below(len);
    for (int i = 0; i < len; ++i) {
        const Rational& x = f.at(w.boundary[i]);
        if (x == level)
            throw std::invalid_argument("ambiguous level: boundary vertex " +
                                        std::to_string(w.boundary[i]) + " ties the center");
        below[i] = x < level;
    }
    int arcs = 0;
    bool all = true;
    for (int i = 0; i < len; ++i) {
        if (!below[i]) all = false;
        if (below[i] && !below[(i + len - 1) % len]) ++arcs;
    }
    if (all) return 1;  // S^- is the whole circle, chi = 0
    return 1 - arcs;
}

/// Sectional curvature of a wheel: expectation of the restricted index at
/// the center, under the pushforward of mu by restriction.
inline Rational sectional_curvature(const Graph& g, const Measure& m, const WheelEmbedding& w) {
    validate_measure(g, m);
    Rational k = 0;
    for (size_t j = 0; j < m.support.size(); ++j)
        k += m.weights[j] * wheel_index(g, w, m.support[j]);
    return k;
}

/// Exhaustive uniform sectional curvature of a wheel: averages the restricted
/// index over all orderings of the wheel's own vertices (center + boundary).
inline Rational uniform_sectional_curvature(const Graph& g, const WheelEmbedding& w) {
    validate_wheel(g, w);
    int len = static_cast<int>(w.boundary.size());
    std::vector<int> rank(len + 1);  // rank[0] = center, rank[1..] = boundary
    for (int i = 0; i <= len; ++i) rank[i] = i;
    long long acc = 0, count = 0;
    do {
        int arcs = 0;
        bool all = true;
        for (int i = 0; i < len; ++i) {
            bool b = rank[i + 1] < rank[0];
            bool prev = rank[(i + len - 1) % len + 1] < rank[0];
            if (!b) all = false;
            if (b && !prev) ++arcs;
        }
        acc += all ? 1 : 1 - arcs;
        ++count;
    } while (std::next_permutation(rank.begin(), rank.end()));
    return Rational(acc, count);
}

}  // namespace curv
