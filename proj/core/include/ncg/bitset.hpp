#ifndef NCG_BITSET_HPP
#define NCG_BITSET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "ncg/errors.hpp"

namespace ncg {

/// Fixed-capacity bitset over vertex positions, packed in 64-bit words.
/// Unused bits of the last word are kept zero so word-wise comparison and
/// hashing see a canonical representation.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::size_t bit_count)
        : bits_(bit_count), words_((bit_count + 63) / 64, 0) {}

    static VertexSet full(std::size_t bit_count) {
        VertexSet s(bit_count);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet from_positions(std::size_t bit_count,
                                    std::span<const std::uint32_t> positions) {
        VertexSet s(bit_count);
        for (auto p : positions) s.set(p);
        return s;
    }

    std::size_t size() const { return bits_; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    bool intersects(const VertexSet& other) const {
        std::size_t n = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    /// True iff every member of `other` is also a member of this set.
    bool contains_all(const VertexSet& other) const {
        for (std::size_t i = 0; i < other.words_.size(); ++i) {
            std::uint64_t w = other.words_[i];
            if (i >= words_.size()) {
                if (w) return false;
            } else if (w & ~words_[i]) {
                return false;
            }
        }
        return true;
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    bool operator==(const VertexSet&) const = default;

    /// Members in ascending position order.
    std::vector<std::uint32_t> positions() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::uint32_t p) { out.push_back(p); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                f(static_cast<std::uint32_t>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

private:
    void check_index(std::size_t i) const {
        if (i >= bits_) throw InvalidArgument("bit index out of range");
    }

    void trim() {
        unsigned tail = bits_ & 63;
        if (tail && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Orders sets by their ascending member sequences (the order used whenever a
/// "lexicographically least" witness is promised). {0,5} sorts before {1,2};
/// a set sorts before any proper superset sharing its prefix.
inline bool set_lex_less(const VertexSet& a, const VertexSet& b) {
    auto pa = a.positions();
    auto pb = b.positions();
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
}

} // namespace ncg

#endif
