#include "ccrgraph/ginf.hpp"

#include "ccrgraph/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace ccrgraph::graph {

namespace {

constexpr std::size_t kGInfinityCeiling = 12;
constexpr std::size_t kIsomorphismLimit = 16;

} // namespace

VertexSet g_infinity_subset(std::size_t n, std::size_t index)
{
    return VertexSet::from_mask(n, static_cast<std::uint64_t>(index) + 1);
}

Graph g_infinity(const Graph& g, std::size_t max_n)
{
    const std::size_t n = g.size();
    if (n > std::min(max_n, kGInfinityCeiling))
        throw LimitExceeded("g_infinity: " + std::to_string(n) + " vertices exceeds limit " +
                            std::to_string(std::min(max_n, kGInfinityCeiling)));
    const std::size_t subsets = (std::size_t{1} << n) - 1;
    std::vector<std::uint64_t> row_mask(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        row_mask[v] = g.neighbors(v).to_mask();
    // reach[t]: bit j set iff an odd number of i in t are adjacent to j.
    std::vector<std::uint64_t> reach(subsets + 1, 0);
    for (std::size_t t = 1; t <= subsets; ++t) {
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(t));
        reach[t] = reach[t & (t - 1)] ^ row_mask[low];
    }
    Graph out(subsets);
    for (std::size_t s = 1; s <= subsets; ++s)
        for (std::size_t t = s + 1; t <= subsets; ++t)
            if (std::popcount(reach[s] & t) & 1)
                out.add_edge(s - 1, t - 1);
    return out;
}

namespace {

using Signature = std::pair<std::size_t, std::vector<std::size_t>>;

std::vector<Signature> signatures(const Graph& g)
{
    const std::size_t n = g.size();
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v)
        degree[v] = g.degree(v);
    std::vector<Signature> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
        sig[v].first = degree[v];
        g.neighbors(v).for_each_set([&](std::size_t w) { sig[v].second.push_back(degree[w]); });
        std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    return sig;
}

} // namespace

std::optional<std::vector<std::size_t>> graphs_isomorphic(const Graph& g, const Graph& h)
{
    if (g.size() > kIsomorphismLimit || h.size() > kIsomorphismLimit)
        throw LimitExceeded("graphs_isomorphic: graphs are capped at 16 vertices");
    if (g.size() != h.size() || g.edge_count() != h.edge_count())
        return std::nullopt;
    const std::size_t n = g.size();
    const auto sig_g = signatures(g);
    const auto sig_h = signatures(h);
    {
        auto a = sig_g;
        auto b = sig_h;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }

    // Visit g's vertices so that each one (after the first of its component)
    // has an already-mapped neighbour: BFS from the highest degree vertex.
    std::vector<std::size_t> order;
    std::vector<bool> queued(n, false);
    while (order.size() < n) {
        std::size_t start = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!queued[v] && (start == n || sig_g[v].first > sig_g[start].first))
                start = v;
        queued[start] = true;
        std::size_t head = order.size();
        order.push_back(start);
        while (head < order.size()) {
            g.neighbors(order[head++]).for_each_set([&](std::size_t w) {
                if (!queued[w]) {
                    queued[w] = true;
                    order.push_back(w);
                }
            });
        }
    }

    std::vector<std::size_t> image(n, n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == n)
            return true;
        const std::size_t v = order[depth];
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || sig_h[c] != sig_g[v])
                continue;
            bool consistent = true;
            for (std::size_t d = 0; d < depth && consistent; ++d) {
                const std::size_t u = order[d];
                consistent = g.adjacent(u, v) == h.adjacent(image[u], c);
            }
            if (!consistent)
                continue;
            image[v] = c;
            used[c] = true;
            if (extend(depth + 1))
                return true;
            used[c] = false;
        }
        image[v] = n;
        return false;
    };
    if (!extend(0))
        return std::nullopt;
    return image;
}

} // namespace ccrgraph::graph
