#pragma once

#include "ccrgraph/bitvector.hpp"
#include "ccrgraph/gf2.hpp"

#include <cstddef>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace ccrgraph::graph {

using VertexSet = BitVector;
using Edge = std::pair<std::size_t, std::size_t>;

// Finite simple graph: symmetric, zero-diagonal bit-row adjacency. Vertices
// are 0..n-1. The adjacency matrix doubles as the graph's alternating form
// over GF(2).
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adjacency_(n, n) {}

    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges)
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    // Throws InvalidArgument unless the matrix is alternating.
    static Graph from_adjacency(gf2::BitMatrix adjacency);

    static Graph null_graph(std::size_t n) { return Graph(n); }
    static Graph complete(std::size_t n);
    static Graph path(std::size_t n);
    static Graph cycle(std::size_t n);
    // Vertex 0 joined to 1..n-1.
    static Graph star(std::size_t n);
    // k disjoint edges (2j, 2j+1) followed by l isolated vertices.
    static Graph canonical(std::size_t k, std::size_t l);
    // Each edge present independently with probability p.
    static Graph random(std::size_t n, double p, std::mt19937_64& rng);
    // Bit b of `mask` is the b-th pair (i<j) in lexicographic order; n <= 11.
    static Graph from_pair_mask(std::size_t n, std::uint64_t mask);

    std::size_t size() const { return adjacency_.rows(); }
    bool adjacent(std::size_t u, std::size_t v) const { return adjacency_.get(u, v); }
    const gf2::BitMatrix& adjacency() const { return adjacency_; }
    VertexSet neighbors(std::size_t v) const { return adjacency_.row(v); }
    std::size_t degree(std::size_t v) const;
    std::size_t edge_count() const;
    std::vector<Edge> edges() const;

    void add_edge(std::size_t u, std::size_t v) { set_edge(u, v, true); }
    void remove_edge(std::size_t u, std::size_t v) { set_edge(u, v, false); }
    void set_edge(std::size_t u, std::size_t v, bool present);

    // Number of w in s adjacent to v.
    std::size_t count_into(std::size_t v, const VertexSet& s) const;
    // Subgraph induced on `vertices`, relabelled 0..|vertices|-1 in the given order.
    Graph induced(std::span<const std::size_t> vertices) const;

    bool operator==(const Graph& other) const = default;

private:
    gf2::BitMatrix adjacency_;
};

} // namespace ccrgraph::graph
