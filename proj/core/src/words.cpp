#include "ccrgraph/words.hpp"

#include "ccrgraph/errors.hpp"

#include <array>
#include <stdexcept>

namespace ccrgraph::graph {

std::complex<double> Phase::value() const
{
    static constexpr std::array<std::complex<double>, 4> values{
        std::complex<double>{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return values[exponent_];
}

std::string Phase::to_string() const
{
    static constexpr std::array<const char*, 4> names{"+1", "+i", "-1", "-i"};
    return names[exponent_];
}

GeneratorWord GeneratorWord::generator(std::size_t n, std::size_t v)
{
    GeneratorWord w = unit(n);
    w.support.set(v);
    return w;
}

std::string GeneratorWord::to_string() const
{
    return phase.to_string() + support.to_string();
}

namespace {

void check_set(const Graph& g, const VertexSet& s)
{
    if (s.size() != g.size())
        throw InvalidArgument("vertex set width " + std::to_string(s.size()) + " does not match graph on " +
                              std::to_string(g.size()) + " vertices");
}

} // namespace

int cocycle(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    check_set(g, s);
    check_set(g, t);
    std::size_t crossings = 0;
    s.for_each_set([&](std::size_t x) { crossings += g.count_into(x, t); });
    return (crossings & 1U) ? -1 : 1;
}

std::size_t edges_inside(const Graph& g, const VertexSet& s)
{
    check_set(g, s);
    std::size_t twice = 0;
    s.for_each_set([&](std::size_t x) { twice += g.count_into(x, s); });
    return twice / 2;
}

GeneratorWord word_mul(const Graph& g, const GeneratorWord& w1, const GeneratorWord& w2)
{
    check_set(g, w1.support);
    check_set(g, w2.support);
    const std::size_t n = g.size();
    // Generators of w1 strictly above the current generator of w2.
    VertexSet above = w1.support;
    std::size_t swaps = 0;
    std::size_t cleared = 0;
    w2.support.for_each_set([&](std::size_t j) {
        for (; cleared <= j && cleared < n; ++cleared)
            above.reset(cleared);
        swaps += g.count_into(j, above);
    });
    return {w1.phase * w2.phase * Phase::sign(swaps & 1U), w1.support ^ w2.support};
}

GeneratorWord word_adjoint(const Graph& g, const GeneratorWord& w)
{
    // Reversing the product transposes every pair inside the support.
    return {w.phase.conj() * Phase::sign(edges_inside(g, w.support) & 1U), w.support};
}

Phase self_adjoint_phase(const Graph& g, const VertexSet& s)
{
    check_set(g, s);
    if (s.none())
        throw InvalidArgument("self_adjoint_phase: empty vertex set");
    return (edges_inside(g, s) & 1U) ? Phase::i() : Phase::one();
}

std::vector<GeneratorWord> normalize_pairing(const Graph& g, std::span<const std::size_t> us,
                                             std::span<const std::size_t> vs, std::size_t l)
{
    const std::size_t n = us.size();
    if (vs.size() != n)
        throw InvalidArgument("normalize_pairing: need as many v's as u's");
    if (l > n)
        throw InvalidArgument("normalize_pairing: split point exceeds n");
    std::vector<bool> seen(g.size(), false);
    for (auto list : {us, vs})
        for (std::size_t v : list) {
            if (v >= g.size())
                throw InvalidArgument("normalize_pairing: vertex " + std::to_string(v) + " out of range");
            if (seen[v])
                throw InvalidArgument("normalize_pairing: vertex " + std::to_string(v) + " listed twice");
            seen[v] = true;
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (g.adjacent(us[a], us[b]))
                throw InvalidArgument("normalize_pairing: u" + std::to_string(a + 1) + " and u" + std::to_string(b + 1) +
                                      " anticommute");
            if (g.adjacent(vs[a], vs[b]))
                throw InvalidArgument("normalize_pairing: v" + std::to_string(a + 1) + " and v" + std::to_string(b + 1) +
                                      " anticommute");
        }
    // Pattern with 1-based i, j: column j <= l and row i > l are exact.
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            if (j > l && i <= l)
                continue;
            if (g.adjacent(us[i - 1], vs[j - 1]) != (i == j))
                throw InvalidArgument("normalize_pairing: u" + std::to_string(i) + ", v" + std::to_string(j) +
                                      " break the pairing pattern");
        }

    std::vector<GeneratorWord> out;
    out.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) {
        VertexSet support(g.size());
        support.set(vs[j - 1]);
        if (j > l)
            for (std::size_t i = 1; i <= l; ++i)
                if (g.adjacent(vs[j - 1], us[i - 1]))
                    support.set(vs[i - 1]);
        out.push_back({self_adjoint_phase(g, support), std::move(support)});
    }

    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t m = 1; m <= n; ++m) {
            VertexSet um(g.size());
            um.set(us[m - 1]);
            if ((cocycle(g, um, out[j - 1].support) == -1) != (m == j))
                throw std::logic_error("normalize_pairing: w" + std::to_string(j) + " and u" + std::to_string(m) +
                                       " have the wrong commutation");
        }
    return out;
}

} // namespace ccrgraph::graph
