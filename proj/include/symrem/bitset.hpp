#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "symrem/kernels.hpp"

namespace symrem {

// Fixed-size dynamic bitset. The bulk operations go through the runtime
// dispatched kernels; bits past size() are kept zero.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t nbits, bool fill = false) : nbits_(nbits) {
        words_.assign((nbits + 63) / 64, fill ? ~std::uint64_t{0} : 0);
        if (fill) clear_tail();
    }

    std::size_t size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() { words_.assign(words_.size(), 0); }

    void fill() {
        words_.assign(words_.size(), ~std::uint64_t{0});
        clear_tail();
    }

    std::uint64_t count() const {
        return kernels::active().popcount(words_.data(), words_.size());
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    // this &= other; returns true if any bit survives
    bool intersect_with(const Bitset& other) {
        return kernels::active().and_into(words_.data(), words_.data(), other.words_.data(),
                                          words_.size());
    }

    void union_with(const Bitset& other) {
        kernels::active().or_into(words_.data(), other.words_.data(), words_.size());
    }

    std::uint64_t intersection_count(const Bitset& other) const {
        return kernels::active().and_popcount(words_.data(), other.words_.data(), words_.size());
    }

    bool intersects(const Bitset& other) const {
        return kernels::active().and_any(words_.data(), other.words_.data(), words_.size());
    }

    bool operator==(const Bitset& other) const {
        return nbits_ == other.nbits_ &&
               kernels::active().equal(words_.data(), other.words_.data(), words_.size());
    }

    // Index of the first set bit at or after `from`, or size() if none.
    std::size_t next_set(std::size_t from) const {
        if (from >= nbits_) return nbits_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return nbits_;
            w = words_[wi];
        }
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                auto bit = static_cast<std::size_t>(std::countr_zero(w));
                fn((wi << 6) + bit);
                w &= w - 1;
            }
        }
    }

private:
    void clear_tail() {
        if (nbits_ & 63) words_.back() &= ~std::uint64_t{0} >> (64 - (nbits_ & 63));
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace symrem
