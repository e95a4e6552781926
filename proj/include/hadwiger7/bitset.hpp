#pragma once

// Dynamic fixed-capacity bitset used for vertex sets and adjacency rows.
// Word-array based so set algebra on graphs up to a few hundred vertices
// stays a handful of uint64 ops.

#include <cstdint>
#include <cassert>
#include <vector>

namespace hadwiger7 {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int capacity)
        : n_(capacity), w_((capacity + 63) / 64, 0) {}

    int capacity() const { return n_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : w_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // First set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int word = from >> 6;
        uint64_t cur = w_[word] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (cur) {
                int i = (word << 6) + __builtin_ctzll(cur);
                return i < n_ ? i : -1;
            }
            if (++word >= (int)w_.size()) return -1;
            cur = w_[word];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    static Bitset of(int capacity, const std::vector<int>& items) {
        Bitset b(capacity);
        for (int i : items) b.set(i);
        return b;
    }

    // All bits 0..capacity-1 set.
    static Bitset full(int capacity) {
        Bitset b(capacity);
        for (int i = 0; i < capacity; ++i) b.set(i);
        return b;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace hadwiger7
