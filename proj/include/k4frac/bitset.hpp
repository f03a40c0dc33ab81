#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace k4frac {

// Fixed-width bitset sized at construction; the vertex-set representation.
// Word-wise AND of neighborhood rows is the dominant operation everywhere,
// so the word array is kept tight and intersection counts avoid allocation.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits, bool fill = false)
        : nbits_(nbits), words_((nbits + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
        if (nbits < 0) throw std::invalid_argument("negative bitset size");
        trim();
    }

    int size_bits() const { return nbits_; }

    void set(int i) { words_[check(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[check(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[check(i) >> 6] >> (i & 63)) & 1u; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) {
        a &= b;
        return a;
    }

    bool operator==(const Bitset&) const = default;

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // popcount(*this & o) without materializing the intersection
    int and_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    // ascending order
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(wi * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    int check(int i) const {
        if (i < 0 || i >= nbits_) throw std::out_of_range("bit index out of range");
        return i;
    }

    void trim() {
        if (nbits_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace k4frac
