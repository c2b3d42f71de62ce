#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace gpk {

// Set of small integers stored one bit per element. Capacity is fixed at
// construction; all elements are in [0, capacity).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    void clear() { std::fill(words_.begin(), words_.end(), uint64_t{0}); }
    void set_all() {
        std::fill(words_.begin(), words_.end(), ~uint64_t{0});
        trim();
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    // First element, or -1 when empty.
    int min() const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
        return -1;
    }

    // First element greater than `after`, or -1. Pass -1 to start.
    int next(int after) const {
        int i = after + 1;
        if (i >= nbits_) return -1;
        size_t k = static_cast<size_t>(i) >> 6;
        uint64_t w = words_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return static_cast<int>(k * 64 + std::countr_zero(w));
            if (++k == words_.size()) return -1;
            w = words_[k];
        }
    }

    // Visits elements in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < words_.size(); ++k) {
            uint64_t w = words_[k];
            while (w) {
                f(static_cast<int>(k * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    // Removes every element of o from this set.
    Bitset& setminus(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    bool operator==(const Bitset&) const = default;

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (~uint64_t{0}) >> (64 - (nbits_ & 63));
        if (nbits_ == 0 && !words_.empty()) words_.back() = 0;
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace gpk
