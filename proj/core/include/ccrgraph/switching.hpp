#pragma once

#include "ccrgraph/gf2.hpp"
#include "ccrgraph/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ccrgraph::graph {

// Replace vertex x by the product vertex over s (x in s). The new vertex keeps
// index x and is adjacent to u iff an odd number of vertices of s are adjacent
// to u in the old graph.
struct SwitchMove {
    std::size_t x = 0;
    VertexSet s;
};

// Throws InvalidArgument if x is out of range, s has the wrong width, or x is not in s.
Graph apply_switch(const Graph& g, const SwitchMove& move);
Graph replay(const Graph& g, std::span<const SwitchMove> moves);

// GF(2) shadow of a move sequence: column x of the returned forward matrix is
// the set of source vertices whose product the current vertex x stands for.
gf2::BasisChange move_shadow(std::size_t n, std::span<const SwitchMove> moves);

struct CanonicalForm {
    std::size_t k = 0;
    std::size_t l = 0;
    std::vector<SwitchMove> moves;  // source graph -> Graph::canonical(k, l)
    gf2::BasisChange basis;         // shadow of moves; basisᵀ·A·basis = canonical adjacency
};

// Reduces g to k disjoint edges plus l isolated vertices by switch moves:
// vertices are absorbed one at a time, each triangle the new vertex forms
// with a matched pair is broken by multiplying it into the pair, then a star
// on the unmatched vertices is collapsed to a single edge. A final
// relabelling (three moves per transposition) puts pairs first in index
// order. k is cross-checked against the GF(2) rank; a mismatch throws
// std::logic_error.
CanonicalForm canonicalize(const Graph& g);

// k(G) = rank of the adjacency over GF(2) / 2.
std::size_t k_invariant(const Graph& g);

struct AlgebraClass {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t l = 0;
    std::string label;  // "M_{2^k} ⊗ C^{2^l}" with the powers evaluated
    bool simple = false;

    bool operator==(const AlgebraClass&) const = default;
};

std::string algebra_label(std::size_t k, std::size_t l);
AlgebraClass classify(const Graph& g);

// B(g) ≅ B(h): same vertex count and same k.
bool equivalent(const Graph& g, const Graph& h);

struct ClassCount {
    std::size_t k = 0;
    std::uint64_t labeled = 0;
    std::optional<std::uint64_t> types;  // isomorphism types, for n <= max_types_n
};

struct EnumerateOptions {
    std::size_t limit = 6;        // largest n accepted
    std::size_t max_types_n = 5;  // de-duplicate into isomorphism types up to this n
    std::size_t jobs = 1;
};

// Exhaustive over all 2^{n(n-1)/2} labelled graphs; one row per realized k,
// ascending. Throws LimitExceeded above options.limit. The result does not
// depend on options.jobs.
std::vector<ClassCount> enumerate_classes(std::size_t n, EnumerateOptions options = {});

struct Simplicity {
    bool simple = false;
    // When not simple: a nonempty s with every vertex adjacent to an even
    // number of vertices of s (the word over s is central).
    std::optional<VertexSet> witness;
};

Simplicity is_simple(const Graph& g);

} // namespace ccrgraph::graph
