#ifndef PG_BITSET_HPP
#define PG_BITSET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace pg {

// Fixed-width dynamic bit set used for element sets and adjacency rows.
// All binary operations require both operands to have the same width.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }

    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool operator==(const Bitset& o) const = default;

    // Lexicographic on (width, words); gives a strict weak order for map keys.
    bool operator<(const Bitset& o) const {
        if (nbits_ != o.nbits_) return nbits_ < o.nbits_;
        return words_ < o.words_;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool is_proper_subset_of(const Bitset& o) const {
        return *this != o && is_subset_of(o);
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Index of the first set bit at or after `from`, or size() if none.
    int next(int from) const {
        if (from >= nbits_) return nbits_;
        std::size_t wi = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (w) return static_cast<int>((wi << 6) + std::countr_zero(w));
            if (++wi == words_.size()) return nbits_;
            w = words_[wi];
        }
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(static_cast<int>((wi << 6) + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace pg

#endif
