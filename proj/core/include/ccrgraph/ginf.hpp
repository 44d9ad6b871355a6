#pragma once

#include "ccrgraph/graph.hpp"

#include <optional>
#include <vector>

namespace ccrgraph::graph {

// Graph on the nonempty subsets of V; vertex t-1 is the subset whose
// characteristic vector is the binary number t. Two subsets are adjacent iff
// the number of edges (i, j), i in s, j in t, is odd. Throws LimitExceeded
// when g has more than max_n vertices.
Graph g_infinity(const Graph& g, std::size_t max_n = 4);

// Subset of V for vertex `index` of g_infinity(g).
VertexSet g_infinity_subset(std::size_t n, std::size_t index);

// Vertex bijection g -> h preserving adjacency both ways, if one exists.
// Backtracking over degree / neighbour-degree classes; both graphs must have
// at most 16 vertices (LimitExceeded otherwise).
std::optional<std::vector<std::size_t>> graphs_isomorphic(const Graph& g, const Graph& h);

} // namespace ccrgraph::graph
