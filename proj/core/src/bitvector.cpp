#include "ccrgraph/bitvector.hpp"

#include "ccrgraph/errors.hpp"

#include <algorithm>
#include <functional>

namespace ccrgraph {

namespace {

void check_same_size(const BitVector& a, const BitVector& b)
{
    if (a.size() != b.size())
        throw InvalidArgument("bit vector width mismatch: " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
}

} // namespace

BitVector BitVector::from_indices(std::size_t n_bits, std::span<const std::size_t> indices)
{
    BitVector v(n_bits);
    for (std::size_t i : indices) {
        if (i >= n_bits)
            throw InvalidArgument("index " + std::to_string(i) + " out of range for width " + std::to_string(n_bits));
        v.set(i);
    }
    return v;
}

BitVector BitVector::from_mask(std::size_t n_bits, std::uint64_t mask)
{
    if (n_bits > kWordBits)
        throw InvalidArgument("from_mask supports at most 64 bits");
    BitVector v(n_bits);
    if (n_bits == 0)
        return v;
    if (n_bits < kWordBits)
        mask &= (Word{1} << n_bits) - 1;
    v.words_[0] = mask;
    return v;
}

void BitVector::clear()
{
    std::fill(words_.begin(), words_.end(), Word{0});
}

std::size_t BitVector::count() const
{
    std::size_t total = 0;
    for (Word w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::any() const
{
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::count_and(const BitVector& other) const
{
    check_same_size(*this, other);
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    return total;
}

bool BitVector::is_subset_of(const BitVector& other) const
{
    check_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0)
            return false;
    return true;
}

bool BitVector::intersects(const BitVector& other) const
{
    check_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & other.words_[w]) != 0)
            return true;
    return false;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    check_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other)
{
    check_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= other.words_[w];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other)
{
    check_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] |= other.words_[w];
    return *this;
}

BitVector& BitVector::and_not(const BitVector& other)
{
    check_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= ~other.words_[w];
    return *this;
}

bool BitVector::operator<(const BitVector& other) const
{
    if (n_bits_ != other.n_bits_)
        return n_bits_ < other.n_bits_;
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w] != other.words_[w])
            return words_[w] < other.words_[w];
    return false;
}

std::optional<std::size_t> BitVector::next(std::size_t from) const
{
    if (from >= n_bits_)
        return std::nullopt;
    std::size_t w = from / kWordBits;
    Word bits = words_[w] & (~Word{0} << (from % kWordBits));
    while (true) {
        if (bits != 0)
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size())
            return std::nullopt;
        bits = words_[w];
    }
}

std::vector<std::size_t> BitVector::indices() const
{
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each_set([&](std::size_t i) { out.push_back(i); });
    return out;
}

std::string BitVector::to_string() const
{
    std::string out = "{";
    bool first_item = true;
    for_each_set([&](std::size_t i) {
        if (!first_item)
            out += ',';
        out += std::to_string(i);
        first_item = false;
    });
    out += '}';
    return out;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept
{
    std::size_t h = std::hash<std::size_t>{}(v.size());
    for (BitVector::Word w : v.words())
        h ^= std::hash<BitVector::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace ccrgraph
