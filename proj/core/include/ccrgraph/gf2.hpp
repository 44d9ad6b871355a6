#pragma once

#include "ccrgraph/bitvector.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

// Linear algebra over the two-element field. Rows are packed row-major into
// 64-bit words; row XOR is the inner loop of every elimination here.
namespace ccrgraph::gf2 {

class BitMatrix {
public:
    using Word = BitVector::Word;

    BitMatrix() = default;
    BitMatrix(std::size_t n_rows, std::size_t n_cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t n_cols);
    // Rows given as strings of '0'/'1'; convenient in tests.
    static BitMatrix from_strings(std::span<const std::string> rows);
    static BitMatrix from_strings(std::initializer_list<std::string> rows)
    {
        return from_strings(std::span<const std::string>(rows.begin(), rows.size()));
    }
    // Uniform random entries.
    static BitMatrix random(std::size_t n_rows, std::size_t n_cols, std::mt19937_64& rng);
    // Uniform random symmetric matrix with zero diagonal.
    static BitMatrix random_alternating(std::size_t n, std::mt19937_64& rng);

    std::size_t rows() const { return n_rows_; }
    std::size_t cols() const { return n_cols_; }
    std::size_t words_per_row() const { return words_per_row_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (data_[r * words_per_row_ + c / 64] >> (c % 64)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c) { data_[r * words_per_row_ + c / 64] ^= Word{1} << (c % 64); }

    std::span<const Word> row_words(std::size_t r) const { return {data_.data() + r * words_per_row_, words_per_row_}; }
    std::span<Word> row_words(std::size_t r) { return {data_.data() + r * words_per_row_, words_per_row_}; }

    BitVector row(std::size_t r) const;
    BitVector column(std::size_t c) const;
    void set_row(std::size_t r, const BitVector& v);

    // row(dst) ^= row(src)
    void xor_row(std::size_t dst, std::size_t src);
    void xor_row(std::size_t dst, const BitVector& v);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_columns(std::size_t a, std::size_t b);

    bool is_square() const { return n_rows_ == n_cols_; }
    bool is_symmetric() const;
    // Symmetric with zero diagonal.
    bool is_alternating() const;
    bool is_zero() const;
    bool is_identity() const;

    // M·v for a column vector v of width cols().
    BitVector apply(const BitVector& v) const;

    bool operator==(const BitMatrix& other) const = default;

    std::string to_string() const;

private:
    std::size_t n_rows_ = 0;
    std::size_t n_cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<Word> data_;
};

// Invertible change of basis together with its inverse.
struct BasisChange {
    BitMatrix forward;
    BitMatrix inverse;
};

BitMatrix transpose(const BitMatrix& m);
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);
// Throws SingularMatrixError for singular input, InvalidArgument for non-square.
BitMatrix invert(const BitMatrix& m);

// Row rank. The input is copied; 4096x4096 runs in well under a second.
std::size_t rank(const BitMatrix& m);

// Basis of {x : m·x = 0}; returns cols() - rank(m) independent vectors.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

struct CongruenceResult {
    std::size_t k = 0;  // number of hyperbolic blocks; 2k = rank
    BasisChange basis;  // forward = s with sᵀ·a·s canonical
};

struct CongruenceOptions {
    // Recompute sᵀ·a·s and forward·inverse and throw std::logic_error on mismatch.
    bool verify = false;
};

// Congruence normal form of an alternating form: sᵀ·a·s has k blocks
// [[0,1],[1,0]] on the leading diagonal and zeros elsewhere. Symmetric
// pairing: pick a(i,j)=1, move i,j to the next leading pair, clear their rows
// and columns, continue on the remainder.
// Throws InvalidArgument unless a is square, symmetric, zero-diagonal.
CongruenceResult congruent_canonicalize(const BitMatrix& a, CongruenceOptions options = {});

// The target of congruent_canonicalize: k leading hyperbolic blocks in an n×n zero matrix.
BitMatrix hyperbolic_form(std::size_t n, std::size_t k);

// sᵀ·a·s
BitMatrix congruence(const BitMatrix& a, const BitMatrix& s);

} // namespace ccrgraph::gf2
