#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace peanocube {

// Fixed-universe dynamic bitset.  Vertex sets on the hot paths (intervals,
// hull iteration, axiom checks) live here; the public API trades in sorted
// std::vector<int> and converts at the boundary.
class Bitset {
public:
    Bitset() : n_(0) {}
    explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_) {
            if (w) return true;
        }
        return false;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) return true;
        }
        return false;
    }

    bool contains(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            if (o.words_[i] & ~words_[i]) return false;
        }
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    // First set bit at index >= from, or -1.
    int first(int from = 0) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi >= static_cast<int>(words_.size())) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i = first(); i >= 0; i = first(i + 1)) out.push_back(i);
        return out;
    }

    static Bitset of(int n, const std::vector<int>& members) {
        Bitset b(n);
        for (int v : members) b.set(v);
        return b;
    }

    static Bitset full(int n) {
        Bitset b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

private:
    int n_;
    std::vector<uint64_t> words_;
};

}  // namespace peanocube
