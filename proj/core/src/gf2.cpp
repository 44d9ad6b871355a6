#include "ccrgraph/gf2.hpp"

#include "ccrgraph/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace ccrgraph::gf2 {

namespace {

using Word = BitMatrix::Word;

Word tail_mask(std::size_t n_cols)
{
    const std::size_t rem = n_cols % 64;
    return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

void xor_words(std::span<Word> dst, std::span<const Word> src, std::size_t from_word = 0)
{
    for (std::size_t w = from_word; w < dst.size(); ++w)
        dst[w] ^= src[w];
}

// Column index of the lowest set bit at or after `from`, scanning one row.
std::optional<std::size_t> next_in_row(std::span<const Word> row, std::size_t from, std::size_t n_cols)
{
    if (from >= n_cols)
        return std::nullopt;
    std::size_t w = from / 64;
    Word bits = row[w] & (~Word{0} << (from % 64));
    while (true) {
        if (bits != 0)
            return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == row.size())
            return std::nullopt;
        bits = row[w];
    }
}

} // namespace

BitMatrix::BitMatrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      words_per_row_(BitVector::word_count(n_cols)),
      data_(n_rows * BitVector::word_count(n_cols), 0)
{
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, std::size_t n_cols)
{
    BitMatrix m(rows.size(), n_cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows)
{
    const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), n_cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != n_cols)
            throw InvalidArgument("ragged bit matrix rows");
        for (std::size_t c = 0; c < n_cols; ++c) {
            const char ch = rows[r][c];
            if (ch != '0' && ch != '1')
                throw InvalidArgument("bit matrix rows must contain only '0' and '1'");
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

BitMatrix BitMatrix::random(std::size_t n_rows, std::size_t n_cols, std::mt19937_64& rng)
{
    BitMatrix m(n_rows, n_cols);
    const Word last = tail_mask(n_cols);
    for (std::size_t r = 0; r < n_rows; ++r) {
        auto row = m.row_words(r);
        for (Word& w : row)
            w = rng();
        if (!row.empty())
            row.back() &= last;
    }
    return m;
}

BitMatrix BitMatrix::random_alternating(std::size_t n, std::mt19937_64& rng)
{
    BitMatrix m = random(n, n, rng);
    // Keep the strict upper triangle and mirror it.
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c <= r; ++c)
            m.set(r, c, c < r && m.get(c, r));
    return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value)
{
    Word& w = data_[r * words_per_row_ + c / 64];
    const Word bit = Word{1} << (c % 64);
    w = value ? (w | bit) : (w & ~bit);
}

BitVector BitMatrix::row(std::size_t r) const
{
    BitVector v(n_cols_);
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

BitVector BitMatrix::column(std::size_t c) const
{
    BitVector v(n_rows_);
    for (std::size_t r = 0; r < n_rows_; ++r)
        if (get(r, c))
            v.set(r);
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v)
{
    if (v.size() != n_cols_)
        throw InvalidArgument("row width mismatch");
    auto src = v.words();
    std::copy(src.begin(), src.end(), row_words(r).begin());
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src)
{
    Word* d = data_.data() + dst * words_per_row_;
    const Word* s = data_.data() + src * words_per_row_;
    for (std::size_t w = 0; w < words_per_row_; ++w)
        d[w] ^= s[w];
}

void BitMatrix::xor_row(std::size_t dst, const BitVector& v)
{
    if (v.size() != n_cols_)
        throw InvalidArgument("row width mismatch");
    xor_words(row_words(dst), v.words());
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    std::swap_ranges(row_words(a).begin(), row_words(a).end(), row_words(b).begin());
}

void BitMatrix::swap_columns(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < n_rows_; ++r) {
        const bool va = get(r, a);
        const bool vb = get(r, b);
        if (va != vb) {
            flip(r, a);
            flip(r, b);
        }
    }
}

bool BitMatrix::is_symmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t r = 0; r < n_rows_; ++r)
        for (std::size_t c = r + 1; c < n_cols_; ++c)
            if (get(r, c) != get(c, r))
                return false;
    return true;
}

bool BitMatrix::is_alternating() const
{
    if (!is_symmetric())
        return false;
    for (std::size_t i = 0; i < n_rows_; ++i)
        if (get(i, i))
            return false;
    return true;
}

bool BitMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

bool BitMatrix::is_identity() const
{
    return is_square() && *this == identity(n_rows_);
}

BitVector BitMatrix::apply(const BitVector& v) const
{
    if (v.size() != n_cols_)
        throw InvalidArgument("vector width mismatch");
    BitVector out(n_rows_);
    for (std::size_t r = 0; r < n_rows_; ++r) {
        auto row = row_words(r);
        std::size_t parity = 0;
        for (std::size_t w = 0; w < words_per_row_; ++w)
            parity ^= static_cast<std::size_t>(std::popcount(row[w] & v.words()[w]));
        if (parity & 1U)
            out.set(r);
    }
    return out;
}

std::string BitMatrix::to_string() const
{
    std::string out;
    out.reserve(n_rows_ * (n_cols_ + 1));
    for (std::size_t r = 0; r < n_rows_; ++r) {
        for (std::size_t c = 0; c < n_cols_; ++c)
            out += get(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

BitMatrix transpose(const BitMatrix& m)
{
    BitMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row_words(r);
        for (std::size_t w = 0; w < row.size(); ++w) {
            Word bits = row[w];
            while (bits != 0) {
                t.set(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)), r, true);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b)
{
    if (a.cols() != b.rows())
        throw InvalidArgument("multiply: shape mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                              " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto row = a.row_words(i);
        auto out = c.row_words(i);
        for (std::size_t w = 0; w < row.size(); ++w) {
            Word bits = row[w];
            while (bits != 0) {
                xor_words(out, b.row_words(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
                bits &= bits - 1;
            }
        }
    }
    return c;
}

std::size_t rank(const BitMatrix& m)
{
    BitMatrix work = m;
    const std::size_t n_rows = work.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < n_rows; ++c) {
        const std::size_t w = c / 64;
        const Word bit = Word{1} << (c % 64);
        std::size_t pivot = r;
        while (pivot < n_rows && (work.row_words(pivot)[w] & bit) == 0)
            ++pivot;
        if (pivot == n_rows)
            continue;
        work.swap_rows(r, pivot);
        auto pivot_row = work.row_words(r);
        for (std::size_t i = r + 1; i < n_rows; ++i) {
            auto row = work.row_words(i);
            if (row[w] & bit)
                xor_words(row, pivot_row, w);
        }
        ++r;
    }
    return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns in row order.
std::vector<std::size_t> reduce(BitMatrix& work, BitMatrix* companion)
{
    std::vector<std::size_t> pivots;
    const std::size_t n_rows = work.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < n_rows; ++c) {
        const std::size_t w = c / 64;
        const Word bit = Word{1} << (c % 64);
        std::size_t pivot = r;
        while (pivot < n_rows && (work.row_words(pivot)[w] & bit) == 0)
            ++pivot;
        if (pivot == n_rows)
            continue;
        work.swap_rows(r, pivot);
        if (companion)
            companion->swap_rows(r, pivot);
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (i == r)
                continue;
            if (work.row_words(i)[w] & bit) {
                work.xor_row(i, r);
                if (companion)
                    companion->xor_row(i, r);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<BitVector> kernel_basis(const BitMatrix& m)
{
    BitMatrix work = m;
    const std::vector<std::size_t> pivots = reduce(work, nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    std::vector<BitVector> basis;
    basis.reserve(m.cols() - pivots.size());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        BitVector x(m.cols());
        x.set(free);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (work.get(i, free))
                x.set(pivots[i]);
        basis.push_back(std::move(x));
    }
    return basis;
}

BitMatrix invert(const BitMatrix& m)
{
    if (!m.is_square())
        throw InvalidArgument("invert: matrix is not square");
    BitMatrix work = m;
    BitMatrix inverse = BitMatrix::identity(m.rows());
    const std::vector<std::size_t> pivots = reduce(work, &inverse);
    if (pivots.size() != m.rows())
        throw SingularMatrixError("invert: matrix is singular (rank " + std::to_string(pivots.size()) + " of " +
                                  std::to_string(m.rows()) + ")");
    return inverse;
}

BitMatrix hyperbolic_form(std::size_t n, std::size_t k)
{
    if (2 * k > n)
        throw InvalidArgument("hyperbolic_form: 2k exceeds n");
    BitMatrix h(n, n);
    for (std::size_t j = 0; j < k; ++j) {
        h.set(2 * j, 2 * j + 1, true);
        h.set(2 * j + 1, 2 * j, true);
    }
    return h;
}

BitMatrix congruence(const BitMatrix& a, const BitMatrix& s)
{
    return multiply(multiply(transpose(s), a), s);
}

CongruenceResult congruent_canonicalize(const BitMatrix& a, CongruenceOptions options)
{
    if (!a.is_square())
        throw InvalidArgument("congruent_canonicalize: matrix is not square");
    if (!a.is_symmetric())
        throw InvalidArgument("congruent_canonicalize: matrix is not symmetric");
    if (!a.is_alternating())
        throw InvalidArgument("congruent_canonicalize: diagonal is not zero");

    const std::size_t n = a.rows();
    BitMatrix work = a;
    // Row r of basis_t is the r-th new basis vector in old coordinates (sᵀ).
    BitMatrix basis_t = BitMatrix::identity(n);
    BitMatrix inverse = BitMatrix::identity(n);

    auto swap_index = [&](std::size_t x, std::size_t y) {
        if (x == y)
            return;
        work.swap_rows(x, y);
        work.swap_columns(x, y);
        basis_t.swap_rows(x, y);
        inverse.swap_rows(x, y);
    };

    std::size_t p = 0;
    while (p + 1 < n) {
        std::optional<std::size_t> found_i;
        std::optional<std::size_t> found_j;
        for (std::size_t i = p; i < n && !found_i; ++i) {
            if (auto j = next_in_row(work.row_words(i), p, n)) {
                found_i = i;
                found_j = *j;
            }
        }
        if (!found_i)
            break;
        std::size_t i = *found_i;
        std::size_t j = *found_j;
        swap_index(i, p);
        if (j == p)
            j = i;
        swap_index(j, p + 1);
        const std::size_t q = p + 1;

        // R1 = {r > q : a(p,r) = 1}, R2 = {r > q : a(q,r) = 1}. Every r in R1
        // gets e_q added, every r in R2 gets e_p added; this clears rows p,q
        // and changes the remaining block by R1·R2ᵀ + R2·R1ᵀ.
        BitVector r1 = work.row(p);
        BitVector r2 = work.row(q);
        for (std::size_t c = 0; c <= q; ++c) {
            r1.reset(c);
            r2.reset(c);
        }
        const BitVector basis_p = basis_t.row(p);
        const BitVector basis_q = basis_t.row(q);
        BitVector inverse_p_delta(n);
        BitVector inverse_q_delta(n);
        for (std::size_t r = q + 1; r < n; ++r) {
            const bool in1 = r1.test(r);
            const bool in2 = r2.test(r);
            if (!in1 && !in2)
                continue;
            if (in1) {
                work.xor_row(r, r2);
                basis_t.xor_row(r, basis_q);
                inverse_q_delta ^= inverse.row(r);
            }
            if (in2) {
                work.xor_row(r, r1);
                basis_t.xor_row(r, basis_p);
                inverse_p_delta ^= inverse.row(r);
            }
            work.set(r, p, false);
            work.set(r, q, false);
        }
        inverse.xor_row(p, inverse_p_delta);
        inverse.xor_row(q, inverse_q_delta);
        BitVector row_p(n);
        row_p.set(q);
        BitVector row_q(n);
        row_q.set(p);
        work.set_row(p, row_p);
        work.set_row(q, row_q);
        p += 2;
    }

    CongruenceResult result;
    result.k = p / 2;
    result.basis.forward = transpose(basis_t);
    result.basis.inverse = std::move(inverse);

    if (options.verify) {
        if (congruence(a, result.basis.forward) != hyperbolic_form(n, result.k))
            throw std::logic_error("congruent_canonicalize: sᵀ·a·s is not the hyperbolic form");
        if (!multiply(result.basis.forward, result.basis.inverse).is_identity())
            throw std::logic_error("congruent_canonicalize: basis inverse mismatch");
    }
    return result;
}

} // namespace ccrgraph::gf2
