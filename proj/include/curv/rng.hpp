#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace curv {

// Deterministic RNG wrapper. std::mt19937_64 output is specified bit-exactly,
// and the bounded draw below avoids std::uniform_int_distribution, whose
// mapping is implementation-defined. Same seed, same stream, everywhere.
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // Uniform draw from [0, n) by rejection on the top multiple of n.
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do { x = gen_(); } while (x >= limit);
        return x % n;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        shuffle(p);
        return p;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace curv
