#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace wilf {

/// Packed bit vector over [0, size()) supporting the shifted-or sweeps used
/// for additive closure and sumset tables. Bits at or beyond size() are kept
/// zero so whole-word scans and equality stay honest.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::int64_t bits)
        : nbits_(bits), words_(static_cast<std::size_t>((bits + 63) / 64), 0) {}

    std::int64_t size() const { return nbits_; }

    bool test(std::int64_t i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[word(i)] >> bit(i)) & 1u;
    }
    void set(std::int64_t i) {
        assert(i >= 0 && i < nbits_);
        words_[word(i)] |= std::uint64_t{1} << bit(i);
    }
    void reset(std::int64_t i) {
        assert(i >= 0 && i < nbits_);
        words_[word(i)] &= ~(std::uint64_t{1} << bit(i));
    }

    /// Sets every bit in [lo, hi).
    void set_range(std::int64_t lo, std::int64_t hi) {
        assert(0 <= lo && lo <= hi && hi <= nbits_);
        for (std::int64_t i = lo; i < hi && (i & 63) != 0; ++i) set(i);
        std::int64_t i = (lo + 63) & ~std::int64_t{63};
        if (i < lo) i = lo;  // lo already word-aligned
        for (; i + 64 <= hi; i += 64) words_[word(i)] = ~std::uint64_t{0};
        for (; i < hi; ++i) set(i);
    }

    /// this |= (src << shift), truncated at size(). src must have the same
    /// size; src may alias this.
    void or_shifted(const BitVec& src, std::int64_t shift) {
        assert(shift >= 0 && src.nbits_ == nbits_);
        if (shift >= nbits_) return;
        const std::size_t ws = static_cast<std::size_t>(shift >> 6);
        const unsigned r = static_cast<unsigned>(shift & 63);
        for (std::size_t w = words_.size(); w-- > ws;) {
            const std::size_t lo = w - ws;
            std::uint64_t v = src.words_[lo] << r;
            if (r != 0 && lo > 0) v |= src.words_[lo - 1] >> (64 - r);
            words_[w] |= v;
        }
        clear_tail();
    }

    /// Number of set bits in [lo, hi).
    std::int64_t count_range(std::int64_t lo, std::int64_t hi) const {
        assert(0 <= lo && lo <= hi && hi <= nbits_);
        std::int64_t n = 0;
        for (std::int64_t i = lo; i < hi;) {
            std::uint64_t v = words_[word(i)];
            v &= ~std::uint64_t{0} << bit(i);
            std::int64_t end = (i | 63) + 1;
            if (end > hi) v &= mask_below(bit(hi - 1) + 1);
            n += std::popcount(v);
            i = end;
        }
        return n;
    }

    /// Index of the first set bit >= from, or -1.
    std::int64_t next_set(std::int64_t from) const {
        if (from < 0) from = 0;
        for (std::int64_t i = from; i < nbits_;) {
            std::uint64_t v = words_[word(i)] & (~std::uint64_t{0} << bit(i));
            if (v != 0) {
                std::int64_t idx = (i & ~std::int64_t{63}) + std::countr_zero(v);
                return idx < nbits_ ? idx : -1;
            }
            i = (i | 63) + 1;
        }
        return -1;
    }

    /// Index of the first clear bit >= from, or -1.
    std::int64_t next_zero(std::int64_t from) const {
        if (from < 0) from = 0;
        for (std::int64_t i = from; i < nbits_;) {
            std::uint64_t v = ~words_[word(i)] & (~std::uint64_t{0} << bit(i));
            if (v != 0) {
                std::int64_t idx = (i & ~std::int64_t{63}) + std::countr_zero(v);
                if (idx < nbits_) return idx;
            }
            i = (i | 63) + 1;
        }
        return -1;
    }

    /// Largest clear index, or -1 when every bit is set.
    std::int64_t last_zero() const {
        for (std::size_t w = words_.size(); w-- > 0;) {
            std::uint64_t v = ~words_[w];
            if (w + 1 == words_.size() && (nbits_ & 63) != 0)
                v &= mask_below(static_cast<unsigned>(nbits_ & 63));
            if (v != 0)
                return static_cast<std::int64_t>(w) * 64 + (63 - std::countl_zero(v));
        }
        return -1;
    }

    /// Start of the first run of at least len consecutive set bits, or -1.
    std::int64_t first_ones_run(std::int64_t len) const {
        assert(len >= 1);
        std::int64_t start = 0;
        while (start + len <= nbits_) {
            std::int64_t z = next_zero(start);
            if (z < 0) return start;
            if (z - start >= len) return start;
            start = z + 1;
        }
        return -1;
    }

    /// Truncates or zero-extends to the new bit count.
    void resize(std::int64_t bits) {
        nbits_ = bits;
        words_.resize(static_cast<std::size_t>((bits + 63) / 64), 0);
        clear_tail();
    }

    bool operator==(const BitVec&) const = default;

private:
    static std::size_t word(std::int64_t i) { return static_cast<std::size_t>(i >> 6); }
    static unsigned bit(std::int64_t i) { return static_cast<unsigned>(i & 63); }
    static std::uint64_t mask_below(unsigned n) {
        return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }
    void clear_tail() {
        if (!words_.empty() && (nbits_ & 63) != 0)
            words_.back() &= mask_below(static_cast<unsigned>(nbits_ & 63));
    }

    std::int64_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace wilf
