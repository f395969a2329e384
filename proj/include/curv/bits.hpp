#pragma once

#include <cstdint>
#include <vector>

namespace curv {

// Fixed-size bit vector used for adjacency rows and vertex subsets.
// Bit positions are graph-local vertex positions, not vertex ids.
class Bits {
public:
    static constexpr int npos = -1;

    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void reset_all() { for (auto& w : w_) w = 0; }

    // Clears bits [0, i].
    void clear_upto(int i) {
        if (i < 0) return;
        int word = i >> 6;
        for (int k = 0; k < word; ++k) w_[k] = 0;
        int rem = (i & 63) + 1;
        if (rem == 64) w_[word] = 0;
        else w_[word] &= ~((uint64_t{1} << rem) - 1);
    }

    Bits& operator&=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool is_subset_of(const Bits& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    int find_first() const { return scan_from(0); }
    int find_next(int i) const { return scan_from(i + 1); }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int scan_from(int i) const {
        if (i >= n_) return npos;
        int word = i >> 6;
        uint64_t cur = w_[word] & ~((i & 63) ? ((uint64_t{1} << (i & 63)) - 1) : 0);
        while (true) {
            if (cur) {
                int bit = (word << 6) + __builtin_ctzll(cur);
                return bit < n_ ? bit : npos;
            }
            if (++word >= (int)w_.size()) return npos;
            cur = w_[word];
        }
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace curv
