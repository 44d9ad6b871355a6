#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ccrgraph {

// Fixed-width bit vector packed into 64-bit words. Pad bits of the last word
// are kept zero so that word-wise comparison and popcount are exact.
class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t n_bits) : n_bits_(n_bits), words_(word_count(n_bits), 0) {}

    static BitVector from_indices(std::size_t n_bits, std::span<const std::size_t> indices);
    static BitVector from_indices(std::size_t n_bits, std::initializer_list<std::size_t> indices)
    {
        return from_indices(n_bits, std::span<const std::size_t>(indices.begin(), indices.size()));
    }
    // Low `n_bits` bits of `mask`; n_bits <= 64.
    static BitVector from_mask(std::size_t n_bits, std::uint64_t mask);

    static constexpr std::size_t word_count(std::size_t n_bits) { return (n_bits + kWordBits - 1) / kWordBits; }

    std::size_t size() const { return n_bits_; }

    bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void set(std::size_t i, bool value)
    {
        if (value)
            set(i);
        else
            reset(i);
    }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
    void clear();

    std::size_t count() const;
    bool any() const;
    bool none() const { return !any(); }

    // popcount(*this & other)
    std::size_t count_and(const BitVector& other) const;
    bool parity_and(const BitVector& other) const { return count_and(other) & 1U; }
    bool is_subset_of(const BitVector& other) const;
    bool intersects(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    BitVector& and_not(const BitVector& other);

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    bool operator==(const BitVector& other) const = default;
    // Lexicographic on (size, words from most significant); only for ordered containers.
    bool operator<(const BitVector& other) const;

    std::optional<std::size_t> first() const { return next(0); }
    // Smallest set index >= from.
    std::optional<std::size_t> next(std::size_t from) const;
    std::vector<std::size_t> indices() const;

    template <class F>
    void for_each_set(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    // Low 64 bits; callers check size() <= 64 when they need all of them.
    std::uint64_t to_mask() const { return words_.empty() ? 0 : words_[0]; }

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    // "{0,2,5}"
    std::string to_string() const;

private:
    std::size_t n_bits_ = 0;
    std::vector<Word> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const noexcept;
};

} // namespace ccrgraph
