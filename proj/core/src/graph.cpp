#include "ccrgraph/graph.hpp"

#include "ccrgraph/errors.hpp"

#include <bit>
#include <string>

namespace ccrgraph::graph {

namespace {

void check_vertex(const Graph& g, std::size_t v)
{
    if (v >= g.size())
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(g.size()) +
                              " vertices");
}

} // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const auto& [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Graph Graph::from_adjacency(gf2::BitMatrix adjacency)
{
    if (!adjacency.is_alternating())
        throw InvalidArgument("adjacency must be square, symmetric, and zero on the diagonal");
    Graph g;
    g.adjacency_ = std::move(adjacency);
    return g;
}

Graph Graph::complete(std::size_t n)
{
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Graph Graph::path(std::size_t n)
{
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(std::size_t n)
{
    if (n < 3)
        throw InvalidArgument("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::star(std::size_t n)
{
    Graph g(n);
    for (std::size_t i = 1; i < n; ++i)
        g.add_edge(0, i);
    return g;
}

Graph Graph::canonical(std::size_t k, std::size_t l)
{
    Graph g(2 * k + l);
    for (std::size_t j = 0; j < k; ++j)
        g.add_edge(2 * j, 2 * j + 1);
    return g;
}

Graph Graph::random(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng))
                g.add_edge(i, j);
    return g;
}

Graph Graph::from_pair_mask(std::size_t n, std::uint64_t mask)
{
    if (n * (n - (n > 0 ? 1 : 0)) / 2 > 64)
        throw InvalidArgument("from_pair_mask supports at most 11 vertices");
    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1U)
                g.add_edge(i, j);
    return g;
}

std::size_t Graph::degree(std::size_t v) const
{
    check_vertex(*this, v);
    std::size_t d = 0;
    for (auto w : adjacency_.row_words(v))
        d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (std::size_t v = 0; v < size(); ++v)
        twice += degree(v);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (adjacent(i, j))
                out.emplace_back(i, j);
    return out;
}

void Graph::set_edge(std::size_t u, std::size_t v, bool present)
{
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v)
        throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    adjacency_.set(u, v, present);
    adjacency_.set(v, u, present);
}

std::size_t Graph::count_into(std::size_t v, const VertexSet& s) const
{
    check_vertex(*this, v);
    if (s.size() != size())
        throw InvalidArgument("vertex set width does not match graph");
    auto row = adjacency_.row_words(v);
    auto words = s.words();
    std::size_t total = 0;
    for (std::size_t w = 0; w < row.size(); ++w)
        total += static_cast<std::size_t>(std::popcount(row[w] & words[w]));
    return total;
}

Graph Graph::induced(std::span<const std::size_t> vertices) const
{
    Graph h(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        check_vertex(*this, vertices[a]);
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (vertices[a] == vertices[b])
                throw InvalidArgument("induced: repeated vertex " + std::to_string(vertices[a]));
            if (adjacent(vertices[a], vertices[b]))
                h.add_edge(a, b);
        }
    }
    return h;
}

} // namespace ccrgraph::graph
