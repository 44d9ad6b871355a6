#include "ccrgraph/switching.hpp"

#include "ccrgraph/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace ccrgraph::graph {

namespace {

void check_move(std::size_t n, const SwitchMove& move)
{
    if (move.x >= n)
        throw InvalidArgument("switch move: vertex " + std::to_string(move.x) + " out of range");
    if (move.s.size() != n)
        throw InvalidArgument("switch move: vertex set width " + std::to_string(move.s.size()) +
                              " does not match graph on " + std::to_string(n) + " vertices");
    if (!move.s.test(move.x))
        throw InvalidArgument("switch move: vertex " + std::to_string(move.x) + " is not in s = " +
                              move.s.to_string());
}

// In-place switch on an adjacency matrix.
void switch_in_place(gf2::BitMatrix& adj, const SwitchMove& move)
{
    const std::size_t n = adj.rows();
    // Bit u of the XOR of rows w in s is the parity of |{w in s : w ~ u}|.
    BitVector row(n);
    move.s.for_each_set([&](std::size_t w) {
        auto src = adj.row_words(w);
        auto dst = row.words();
        for (std::size_t i = 0; i < dst.size(); ++i)
            dst[i] ^= src[i];
    });
    row.reset(move.x);
    adj.set_row(move.x, row);
    for (std::size_t u = 0; u < n; ++u)
        adj.set(u, move.x, row.test(u));
}

// Incrementally maintained GF(2) shadow of a move sequence.
class ShadowTracker {
public:
    explicit ShadowTracker(std::size_t n) : columns_(gf2::BitMatrix::identity(n)), inverse_(gf2::BitMatrix::identity(n)) {}

    void apply(const SwitchMove& move)
    {
        // Column x of the basis becomes the sum of columns in s; the inverse
        // picks up row x on every other row of s.
        BitVector acc(columns_.cols());
        move.s.for_each_set([&](std::size_t w) {
            if (w != move.x)
                acc ^= columns_.row(w);
        });
        columns_.xor_row(move.x, acc);
        move.s.for_each_set([&](std::size_t w) {
            if (w != move.x)
                inverse_.xor_row(w, move.x);
        });
    }

    gf2::BasisChange finish() const { return {gf2::transpose(columns_), inverse_}; }

private:
    gf2::BitMatrix columns_;  // row c = column c of the basis
    gf2::BitMatrix inverse_;
};

} // namespace

Graph apply_switch(const Graph& g, const SwitchMove& move)
{
    check_move(g.size(), move);
    gf2::BitMatrix adj = g.adjacency();
    switch_in_place(adj, move);
    return Graph::from_adjacency(std::move(adj));
}

Graph replay(const Graph& g, std::span<const SwitchMove> moves)
{
    gf2::BitMatrix adj = g.adjacency();
    for (const auto& move : moves) {
        check_move(g.size(), move);
        switch_in_place(adj, move);
    }
    return Graph::from_adjacency(std::move(adj));
}

gf2::BasisChange move_shadow(std::size_t n, std::span<const SwitchMove> moves)
{
    ShadowTracker tracker(n);
    for (const auto& move : moves) {
        check_move(n, move);
        tracker.apply(move);
    }
    return tracker.finish();
}

std::size_t k_invariant(const Graph& g)
{
    return gf2::rank(g.adjacency()) / 2;
}

CanonicalForm canonicalize(const Graph& g)
{
    const std::size_t n = g.size();
    gf2::BitMatrix adj = g.adjacency();
    ShadowTracker shadow(n);
    CanonicalForm form;

    auto move = [&](std::size_t x, VertexSet s) {
        SwitchMove m{x, std::move(s)};
        switch_in_place(adj, m);
        shadow.apply(m);
        form.moves.push_back(std::move(m));
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> unmatched;

    for (std::size_t x = 0; x < n; ++x) {
        // Triangle step: x joined to a pair (a, b). Multiplying x by b clears
        // x~a, by a clears x~b; both at once clears a full triangle. Pairs
        // are mutually non-adjacent, so one move handles all of them.
        VertexSet s(n);
        s.set(x);
        for (const auto& [a, b] : pairs) {
            if (adj.get(x, a))
                s.set(b);
            if (adj.get(x, b))
                s.set(a);
        }
        if (s.count() > 1)
            move(x, std::move(s));

        // Star step: x now only meets unmatched vertices y_1 < ... < y_p.
        // Replacing y_j by y_1·y_j (j >= 2) leaves the single edge x-y_1.
        std::vector<std::size_t> ys;
        for (std::size_t y : unmatched)
            if (adj.get(x, y))
                ys.push_back(y);
        if (ys.empty()) {
            unmatched.push_back(x);
            continue;
        }
        for (std::size_t j = 1; j < ys.size(); ++j)
            move(ys[j], VertexSet::from_indices(n, {ys.front(), ys[j]}));
        unmatched.erase(std::find(unmatched.begin(), unmatched.end(), ys.front()));
        pairs.emplace_back(ys.front(), x);
    }

    // Relabel: pairs to (0,1), (2,3), ..., unmatched after them. A
    // transposition t <-> c is the move sequence (t,{t,c}), (c,{t,c}), (t,{t,c}).
    std::vector<std::size_t> order;
    order.reserve(n);
    for (const auto& [a, b] : pairs) {
        order.push_back(a);
        order.push_back(b);
    }
    std::sort(unmatched.begin(), unmatched.end());
    order.insert(order.end(), unmatched.begin(), unmatched.end());

    std::vector<std::size_t> at(n);     // content currently at index
    std::vector<std::size_t> where(n);  // index currently holding content
    std::iota(at.begin(), at.end(), 0);
    std::iota(where.begin(), where.end(), 0);
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t c = where[order[t]];
        if (c == t)
            continue;
        const VertexSet both = VertexSet::from_indices(n, {t, c});
        move(t, both);
        move(c, both);
        move(t, both);
        std::swap(at[t], at[c]);
        where[at[t]] = t;
        where[at[c]] = c;
    }

    form.k = pairs.size();
    form.l = n - 2 * form.k;
    form.basis = shadow.finish();

    if (adj != Graph::canonical(form.k, form.l).adjacency())
        throw std::logic_error("canonicalize: move script did not reach the canonical graph");
    const std::size_t oracle_k = k_invariant(g);
    if (oracle_k != form.k)
        throw std::logic_error("canonicalize: switch-move k = " + std::to_string(form.k) +
                               " disagrees with GF(2) rank/2 = " + std::to_string(oracle_k));
    return form;
}

std::string algebra_label(std::size_t k, std::size_t l)
{
    auto power = [](std::size_t e) {
        if (e < 63)
            return std::to_string(std::uint64_t{1} << e);
        return "{2^" + std::to_string(e) + "}";
    };
    return "M_" + power(k) + " ⊗ C^" + power(l);
}

AlgebraClass classify(const Graph& g)
{
    AlgebraClass c;
    c.n = g.size();
    c.k = canonicalize(g).k;
    c.l = c.n - 2 * c.k;
    c.label = algebra_label(c.k, c.l);
    c.simple = c.l == 0;
    return c;
}

bool equivalent(const Graph& g, const Graph& h)
{
    return g.size() == h.size() && k_invariant(g) == k_invariant(h);
}

namespace {

struct PairIndex {
    std::size_t n;
    std::vector<std::vector<std::size_t>> bit;  // bit[i][j] for i != j

    explicit PairIndex(std::size_t n_) : n(n_), bit(n_, std::vector<std::size_t>(n_, 0))
    {
        std::size_t b = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++b)
                bit[i][j] = bit[j][i] = b;
    }
};

// Smallest pair mask over all relabellings.
std::uint64_t canonical_mask(std::uint64_t mask, const PairIndex& index,
                             const std::vector<std::vector<std::size_t>>& perms)
{
    std::uint64_t best = mask;
    const std::size_t n = index.n;
    for (const auto& p : perms) {
        std::uint64_t image = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if ((mask >> index.bit[i][j]) & 1U)
                    image |= std::uint64_t{1} << index.bit[p[i]][p[j]];
        best = std::min(best, image);
    }
    return best;
}

struct Partial {
    std::map<std::size_t, std::uint64_t> labeled;
    std::map<std::size_t, std::set<std::uint64_t>> types;
};

} // namespace

std::vector<ClassCount> enumerate_classes(std::size_t n, EnumerateOptions options)
{
    if (n > options.limit)
        throw LimitExceeded("enumerate_classes: n = " + std::to_string(n) + " exceeds limit " +
                            std::to_string(options.limit));
    if (n > 11)
        throw LimitExceeded("enumerate_classes: pair masks support at most 11 vertices");

    const std::size_t n_pairs = n * (n == 0 ? 0 : n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << n_pairs;
    const bool want_types = n <= options.max_types_n;

    const PairIndex index(n);
    std::vector<std::vector<std::size_t>> perms;
    if (want_types) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        do
            perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    const std::size_t jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(options.jobs, total));
    std::vector<Partial> partials(jobs);
    auto work = [&](std::size_t job) {
        const std::uint64_t begin = total * job / jobs;
        const std::uint64_t end = total * (job + 1) / jobs;
        Partial& out = partials[job];
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            const std::size_t k = k_invariant(Graph::from_pair_mask(n, mask));
            ++out.labeled[k];
            if (want_types)
                out.types[k].insert(canonical_mask(mask, index, perms));
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t j = 0; j < jobs; ++j)
            threads.emplace_back(work, j);
    }

    Partial merged;
    for (const auto& part : partials) {
        for (const auto& [k, count] : part.labeled)
            merged.labeled[k] += count;
        for (const auto& [k, masks] : part.types)
            merged.types[k].insert(masks.begin(), masks.end());
    }
    std::vector<ClassCount> table;
    for (const auto& [k, count] : merged.labeled) {
        ClassCount row{k, count, std::nullopt};
        if (want_types)
            row.types = merged.types[k].size();
        table.push_back(row);
    }
    return table;
}

Simplicity is_simple(const Graph& g)
{
    auto kernel = gf2::kernel_basis(g.adjacency());
    if (kernel.empty())
        return {true, std::nullopt};
    return {false, std::move(kernel.front())};
}

} // namespace ccrgraph::graph
