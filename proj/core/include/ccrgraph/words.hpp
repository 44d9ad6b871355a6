#pragma once

#include "ccrgraph/graph.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ccrgraph::graph {

// A fourth root of unity, i^exponent.
class Phase {
public:
    constexpr Phase() = default;
    static constexpr Phase one() { return Phase(0); }
    static constexpr Phase i() { return Phase(1); }
    static constexpr Phase minus_one() { return Phase(2); }
    static constexpr Phase minus_i() { return Phase(3); }
    static constexpr Phase sign(bool negative) { return Phase(negative ? 2 : 0); }

    constexpr std::uint8_t exponent() const { return exponent_; }
    constexpr Phase conj() const { return Phase(static_cast<std::uint8_t>((4 - exponent_) % 4)); }
    constexpr Phase operator*(Phase other) const
    {
        return Phase(static_cast<std::uint8_t>((exponent_ + other.exponent_) % 4));
    }
    constexpr Phase operator-() const { return *this * minus_one(); }
    constexpr bool operator==(const Phase&) const = default;

    std::complex<double> value() const;
    std::string to_string() const;  // "+1", "+i", "-1", "-i"

private:
    constexpr explicit Phase(std::uint8_t e) : exponent_(e) {}
    std::uint8_t exponent_ = 0;
};

// phase · ∏_{v in support, increasing} u_v
struct GeneratorWord {
    Phase phase;
    VertexSet support;

    static GeneratorWord unit(std::size_t n) { return {Phase::one(), VertexSet(n)}; }
    static GeneratorWord generator(std::size_t n, std::size_t v);

    bool operator==(const GeneratorWord&) const = default;
    std::string to_string() const;
};

// (-1)^{#{(x,y) in s×t : x adjacent to y}}, returned as +1 / -1.
int cocycle(const Graph& g, const VertexSet& s, const VertexSet& t);

// Number of edges with both ends in s.
std::size_t edges_inside(const Graph& g, const VertexSet& s);

// Normal-form product. Each generator of w2, taken in increasing order, moves
// left past the larger generators of w1 picking up -1 per adjacent one, then
// cancels against its twin if present (u_v² = 1).
GeneratorWord word_mul(const Graph& g, const GeneratorWord& w1, const GeneratorWord& w2);
GeneratorWord word_adjoint(const Graph& g, const GeneratorWord& w);

// +1 if s spans an even number of edges, +i otherwise; the word
// (phase, s) is then self-adjoint. Throws InvalidArgument for empty s.
Phase self_adjoint_phase(const Graph& g, const VertexSet& s);

// Given u_1..u_n, v_1..v_n (vertex indices) forming the bipartite pattern in
// which v_j (j <= l) and u_i (i > l) anticommute exactly with their partner,
// returns w_1..w_n with w_j = v_j for j <= l and w_j = v_j·∏_{i in K(j)} v_i
// otherwise, K(j) = {i <= l : v_j anticommutes with u_i}. Each w_j
// anticommutes with u_m iff m = j. Indices in the returned words are graph
// vertices; split `l` counts from 1 as in the pattern (0 <= l <= n). Throws
// InvalidArgument on a pattern violation.
std::vector<GeneratorWord> normalize_pairing(const Graph& g, std::span<const std::size_t> us,
                                             std::span<const std::size_t> vs, std::size_t l);

} // namespace ccrgraph::graph
