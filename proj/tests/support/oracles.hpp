#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. Nothing here calls library algorithms; graphs and families are
// only read through their accessors.

#include "ccrgraph/graph.hpp"
#include "ccrgraph/setfam.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using ccrgraph::graph::Graph;
using IntMatrix = std::vector<std::vector<int>>;
using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

inline IntMatrix adjacency(const Graph& g)
{
    const std::size_t n = g.size();
    IntMatrix a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = g.adjacent(i, j) ? 1 : 0;
    return a;
}

inline std::size_t rank_gf2(IntMatrix m)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][c] == 1)
                for (std::size_t k = 0; k < cols; ++k)
                    m[r][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

inline IntMatrix multiply_gf2(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k == 0 ? 0 : b[0].size();
    IntMatrix c(n, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            int s = 0;
            for (std::size_t t = 0; t < k; ++t)
                s ^= a[i][t] & b[t][j];
            c[i][j] = s;
        }
    return c;
}

inline IntMatrix transpose_gf2(const IntMatrix& a)
{
    const std::size_t n = a.size();
    const std::size_t m = n == 0 ? 0 : a[0].size();
    IntMatrix t(m, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            t[j][i] = a[i][j];
    return t;
}

// The move from its definition: only edges at x change; x is joined to u
// when u has an odd number of neighbours in s.
inline IntMatrix switch_move(const IntMatrix& a, std::size_t x, const std::vector<std::size_t>& s)
{
    IntMatrix b = a;
    for (std::size_t u = 0; u < a.size(); ++u) {
        if (u == x)
            continue;
        int count = 0;
        for (std::size_t w : s)
            count += a[u][w];
        b[x][u] = b[u][x] = count % 2;
    }
    return b;
}

inline bool isomorphic(const Graph& g, const Graph& h)
{
    if (g.size() != h.size() || g.edge_count() != h.edge_count())
        return false;
    std::vector<std::size_t> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < g.size() && ok; ++i)
            for (std::size_t j = i + 1; j < g.size() && ok; ++j)
                ok = g.adjacent(i, j) == h.adjacent(p[i], p[j]);
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Product u_{w[0]} u_{w[1]} ... reduced by adjacent transpositions and
// cancellation; returns (negated?, sorted support).
inline std::pair<bool, std::vector<std::size_t>> reduce_word(const Graph& g, std::vector<std::size_t> w)
{
    bool negative = false;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == w[i + 1]) {
                w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
            if (w[i] > w[i + 1]) {
                if (g.adjacent(w[i], w[i + 1]))
                    negative = !negative;
                std::swap(w[i], w[i + 1]);
                changed = true;
            }
        }
    }
    return {negative, w};
}

inline CMatrix pauli_x()
{
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline CMatrix pauli_z()
{
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b)
{
    CMatrix out = CMatrix::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline CMatrix kron_all(const std::vector<CMatrix>& factors)
{
    CMatrix out = CMatrix::Identity(1, 1);
    for (const auto& f : factors)
        out = kron(out, f);
    return out;
}

inline double spectral_norm(const CMatrix& m)
{
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

inline std::size_t commutant_dimension(const std::vector<CMatrix>& gens, std::size_t dim)
{
    // Stack the linear maps X -> Xu - uX (column-major vec) and count the null space.
    const auto d = static_cast<Eigen::Index>(dim);
    CMatrix stacked = CMatrix::Zero(d * d * static_cast<Eigen::Index>(std::max<std::size_t>(gens.size(), 1)), d * d);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const CMatrix k = kron(gens[g].transpose(), CMatrix::Identity(d, d)) - kron(CMatrix::Identity(d, d), gens[g]);
        stacked.block(static_cast<Eigen::Index>(g) * d * d, 0, d * d, d * d) = k;
    }
    Eigen::FullPivLU<CMatrix> lu(stacked);
    lu.setThreshold(1e-9);
    return static_cast<std::size_t>(d * d - lu.rank());
}

// All (F, G) with F nonempty, F ∩ G empty and |F| + |G| <= max_total,
// by ternary enumeration over member indices.
inline bool independent(const ccrgraph::setfam::SetFamily& fam, std::size_t max_total)
{
    const std::size_t n = fam.size();
    const std::size_t m = fam.universe_size();
    std::vector<int> role(n, 0);
    while (true) {
        std::size_t f_count = 0;
        std::size_t total = 0;
        for (int r : role) {
            f_count += r == 1;
            total += r != 0;
        }
        if (f_count > 0 && total <= max_total) {
            bool witnessed = false;
            for (std::size_t e = 0; e < m && !witnessed; ++e) {
                bool ok = true;
                for (std::size_t x = 0; x < n && ok; ++x) {
                    if (role[x] == 1 && !fam.member(x).test(e))
                        ok = false;
                    if (role[x] == 2 && fam.member(x).test(e))
                        ok = false;
                }
                witnessed = ok;
            }
            if (!witnessed)
                return false;
        }
        std::size_t i = 0;
        while (i < n && role[i] == 2)
            role[i++] = 0;
        if (i == n)
            return true;
        ++role[i];
    }
}

inline bool separating(const ccrgraph::setfam::SetFamily& fam, std::size_t max_s_size)
{
    const std::size_t m = fam.universe_size();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
        if (static_cast<std::size_t>(__builtin_popcountll(s)) > max_s_size)
            continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (!((s >> j) & 1U))
                continue;
            bool found = false;
            for (const auto& x : fam.members()) {
                bool exact = true;
                for (std::size_t e = 0; e < m && exact; ++e)
                    if ((s >> e) & 1U)
                        exact = x.test(e) == (e == j);
                found = found || exact;
            }
            if (!found)
                return false;
        }
    }
    return true;
}

inline bool noncovered(const ccrgraph::setfam::SetFamily& fam)
{
    for (std::size_t x = 0; x < fam.size(); ++x) {
        bool has_private = false;
        for (std::size_t e = 0; e < fam.universe_size() && !has_private; ++e) {
            if (!fam.member(x).test(e))
                continue;
            bool elsewhere = false;
            for (std::size_t y = 0; y < fam.size(); ++y)
                elsewhere = elsewhere || (y != x && fam.member(y).test(e));
            has_private = !elsewhere;
        }
        if (!has_private)
            return false;
    }
    return true;
}

} // namespace oracle
