// Acceptance suite: one line per criterion, "PASS" or "FAIL", with the
// measured time. Exit status is nonzero if any criterion fails.

#include "ccrgraph/errors.hpp"
#include "ccrgraph/gf2.hpp"
#include "ccrgraph/ginf.hpp"
#include "ccrgraph/repr.hpp"
#include "ccrgraph/setfam.hpp"
#include "ccrgraph/switching.hpp"
#include "ccrgraph/words.hpp"

#include "support/oracles.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace ccrgraph;
using graph::GeneratorWord;
using graph::Graph;
using graph::VertexSet;
using repr::Operator;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0: no time limit
    std::function<Outcome()> run;
};

const double kSqrt2 = std::sqrt(2.0);

std::size_t pair_count(std::size_t n)
{
    return n * (n == 0 ? 0 : n - 1) / 2;
}

template <typename F>
void for_each_graph(std::size_t n, F&& f)
{
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask)
        f(Graph::from_pair_mask(n, mask));
}

VertexSet random_set(std::size_t n, std::mt19937_64& rng)
{
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
        s.set(v, rng() % 2);
    return s;
}

graph::SwitchMove random_move(std::size_t n, std::mt19937_64& rng)
{
    graph::SwitchMove m{rng() % n, random_set(n, rng)};
    m.s.set(m.x);
    return m;
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : ", ") + p;
    return out;
}

Outcome four_vertex_types()
{
    std::vector<Graph> types;
    for_each_graph(4, [&](const Graph& g) {
        for (const auto& t : types)
            if (oracle::isomorphic(g, t))
                return;
        types.push_back(g);
    });
    std::map<std::size_t, int> per_k;
    for (const auto& t : types)
        ++per_k[graph::classify(t).k];
    std::ostringstream d;
    d << types.size() << " types; k=0:" << per_k[0] << " k=1:" << per_k[1] << " k=2:" << per_k[2];
    const bool ok = types.size() == 11 && per_k.size() == 3 && per_k[0] == 1 && per_k[1] == 6 && per_k[2] == 4;
    return {ok, d.str()};
}

Outcome class_count()
{
    Outcome o;
    std::vector<std::string> parts;
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto rows = graph::enumerate_classes(n);
        std::set<std::size_t> ks;
        std::uint64_t labeled = 0;
        for (const auto& r : rows) {
            ks.insert(r.k);
            labeled += r.labeled;
        }
        bool ok = ks.size() == 1 + n / 2 && labeled == (std::uint64_t{1} << pair_count(n));
        for (std::size_t k = 0; k <= n / 2; ++k)
            ok = ok && ks.count(k) == 1;
        o.ok = o.ok && ok;
        parts.push_back("n=" + std::to_string(n) + ":" + std::to_string(ks.size()));
    }
    o.detail = join(parts);
    return o;
}

Outcome dual_oracle()
{
    std::size_t checked = 0;
    std::size_t bad = 0;
    auto check = [&](const Graph& g) {
        const auto form = graph::canonicalize(g);
        const auto cong = gf2::congruent_canonicalize(g.adjacency(), {.verify = true});
        ++checked;
        if (form.k != cong.k || graph::replay(g, form.moves) != Graph::canonical(form.k, form.l))
            ++bad;
    };
    for (std::size_t n = 0; n <= 5; ++n)
        for_each_graph(n, check);
    std::mt19937_64 rng(3);
    for (std::size_t t = 0; t < 1000; ++t)
        check(Graph::random(1 + rng() % 64, (rng() % 101) / 100.0, rng));
    return {bad == 0, std::to_string(checked) + " graphs, " + std::to_string(bad) + " disagreements"};
}

Outcome switch_invariance()
{
    std::mt19937_64 rng(4);
    std::size_t bad = 0;
    for (std::size_t t = 0; t < 10000; ++t) {
        const std::size_t n = 1 + rng() % 16;
        const Graph g = Graph::random(n, (rng() % 101) / 100.0, rng);
        if (graph::classify(g) != graph::classify(graph::apply_switch(g, random_move(n, rng))))
            ++bad;
    }
    return {bad == 0, "10000 moves, " + std::to_string(bad) + " class changes"};
}

Outcome representation_suite()
{
    double worst_relation = 0;
    double min_canonical = 1e9;
    double min_pairs = 1e9;
    std::size_t graphs = 0;
    std::size_t bad = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for_each_graph(n, [&](const Graph& g) {
            ++graphs;
            const std::size_t l = graph::classify(g).l;
            const auto pairs = repr::rep_pairs(g);
            const auto canonical = repr::rep_canonical(g);
            const double rel = std::max(repr::verify_relations(pairs).max_deviation(),
                                        repr::verify_relations(canonical).max_deviation());
            worst_relation = std::max(worst_relation, rel);
            bool ok = rel <= 1e-12;
            ok = ok && repr::span_dimension(canonical) == (std::size_t{1} << n);
            ok = ok && repr::center_dimension(canonical) == (std::size_t{1} << l);
            ok = ok && repr::commutant_dimension(canonical) == (std::uint64_t{1} << l);
            if (n >= 2) {
                const double dc = repr::min_generator_distance(canonical);
                min_canonical = std::min(min_canonical, dc);
                ok = ok && dc >= kSqrt2 - 1e-9;
                // The pairwise construction repeats the identity for two
                // or more isolated vertices; those graphs are degenerate.
                std::size_t isolated = 0;
                for (std::size_t v = 0; v < n; ++v)
                    isolated += g.degree(v) == 0;
                if (isolated <= 1) {
                    const double dp = repr::min_generator_distance(pairs);
                    min_pairs = std::min(min_pairs, dp);
                    ok = ok && dp >= kSqrt2 - 1e-9;
                }
            }
            bad += !ok;
        });
    std::ostringstream d;
    d << graphs << " graphs, max deviation " << worst_relation << ", min distance canonical " << min_canonical
      << " pairs " << min_pairs << ", " << bad << " failures";
    return {bad == 0, d.str()};
}

Outcome irreducibility()
{
    std::vector<std::string> parts;
    bool ok = true;
    for (std::size_t m : {2, 3}) {
        const auto rep = repr::rep_bipartite(setfam::SetFamily::power_set(m));
        const auto exact = repr::commutant_dimension(rep, repr::CommutantMethod::pauli);
        const auto dense = repr::commutant_dimension(rep, repr::CommutantMethod::dense);
        ok = ok && exact == 1 && dense == 1;
        parts.push_back("|Y|=" + std::to_string(m) + ": " + std::to_string(exact) + "/" + std::to_string(dense));
    }
    return {ok, "commutant (exact/dense) " + join(parts)};
}

Outcome subset_graph_check()
{
    std::size_t pairs = 0;
    std::size_t bad = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<Graph> gs;
        std::vector<Graph> infs;
        for_each_graph(n, [&](const Graph& g) {
            gs.push_back(g);
            infs.push_back(graph::g_infinity(g));
        });
        for (std::size_t a = 0; a < gs.size(); ++a)
            for (std::size_t b = 0; b < gs.size(); ++b) {
                ++pairs;
                const bool iso = graph::graphs_isomorphic(infs[a], infs[b]).has_value();
                bad += iso != graph::equivalent(gs[a], gs[b]);
            }
    }
    return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome fk_independence()
{
    const auto fam = setfam::fk_family(3).family;
    const bool lib = setfam::is_independent(fam, 4).independent;
    const bool naive = oracle::independent(fam, 4);
    return {lib && naive, "library " + std::string(lib ? "independent" : "dependent") + ", enumeration " +
                              (naive ? "independent" : "dependent")};
}

Outcome duality()
{
    std::mt19937_64 rng(9);
    std::size_t bad = 0;
    for (std::size_t t = 0; t < 100; ++t) {
        const auto fam = setfam::SetFamily::random(1 + rng() % 8, rng() % 9, 0.5, rng);
        bad += setfam::dual(setfam::dual(fam)) != fam;
    }
    std::size_t both = 0;
    for (std::size_t t = 0; t < 50; ++t) {
        const auto fam = setfam::SetFamily::random(1 + rng() % 6, 1 + rng() % 6, 0.4, rng);
        const auto d = setfam::dual(fam);
        const bool a = setfam::is_separating(fam) && setfam::is_noncovered(fam).noncovered;
        const bool b = setfam::is_separating(d) && setfam::is_noncovered(d).noncovered;
        both += a;
        bad += a != b;
        bad += !graph::graphs_isomorphic(setfam::bipartite_graph(fam), setfam::bipartite_graph(d)).has_value();
    }
    // Families that do satisfy both conditions: singletons and their perturbations.
    for (std::size_t m = 1; m <= 6; ++m) {
        auto fam = setfam::SetFamily::singletons(m);
        const auto d = setfam::dual(fam);
        bad += !(setfam::is_separating(d) && setfam::is_noncovered(d).noncovered);
    }
    return {bad == 0, "150 random families (" + std::to_string(both) + " satisfying both), " + std::to_string(bad) +
                          " failures"};
}

Outcome word_oracle()
{
    std::mt19937_64 rng(10);
    double worst = 0;
    for (std::size_t t = 0; t < 20; ++t) {
        const std::size_t n = 1 + rng() % 8;
        const Graph g = Graph::random(n, 0.5, rng);
        const auto rep = repr::rep_canonical(g);
        auto word = [&] {
            GeneratorWord w{graph::Phase::one(), random_set(n, rng)};
            for (std::size_t e = rng() % 4; e > 0; --e)
                w.phase = w.phase * graph::Phase::i();
            return w;
        };
        for (std::size_t k = 0; k < 1000; ++k) {
            const auto w1 = word();
            const auto w2 = word();
            const Operator lhs = repr::word_to_operator(rep, w1) * repr::word_to_operator(rep, w2);
            const Operator rhs = repr::word_to_operator(rep, graph::word_mul(g, w1, w2));
            worst = std::max(worst, (lhs - rhs).max_abs());
        }
    }
    std::ostringstream d;
    d << "20000 pairs, max entry deviation " << worst;
    return {worst <= 1e-12, d.str()};
}

Outcome cocycle_laws()
{
    std::mt19937_64 rng(11);
    std::size_t bad = 0;
    for (std::size_t t = 0; t < 10000; ++t) {
        const std::size_t n = 1 + rng() % 24;
        const Graph g = Graph::random(n, 0.5, rng);
        const auto s = random_set(n, rng);
        const auto t1 = random_set(n, rng);
        const auto t2 = random_set(n, rng);
        int crossing = 0;
        for (std::size_t x : s.indices())
            for (std::size_t y : t1.indices())
                crossing += g.adjacent(x, y);
        const int b = graph::cocycle(g, s, t1);
        bad += b != (crossing % 2 ? -1 : 1);
        bad += b != graph::cocycle(g, t1, s);
        bad += graph::cocycle(g, s, t1 ^ t2) != b * graph::cocycle(g, s, t2);
        bad += graph::cocycle(g, t1 ^ t2, s) != b * graph::cocycle(g, t2, s);
    }
    return {bad == 0, "10000 triples, " + std::to_string(bad) + " violations"};
}

Outcome state_vanishing()
{
    double worst = 0;
    std::size_t dense_cases = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for_each_graph(n, [&](const Graph& g) {
            const auto rep = repr::rep_canonical(g);
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                const auto s = VertexSet::from_mask(n, mask);
                const GeneratorWord w{graph::self_adjoint_phase(g, s), s};
                for (std::size_t u = 0; u < n; ++u)
                    if (g.count_into(u, s) % 2 == 1) {
                        worst = std::max(worst, repr::state_vanishing_check(rep, u, w));
                        ++dense_cases;
                    }
            }
        });
    std::mt19937_64 rng(12);
    std::size_t lazy_cases = 0;
    while (lazy_cases < 1000) {
        const std::size_t n = 2 + rng() % 5;
        const Graph g = Graph::random(n, 0.5, rng);
        const std::size_t u = rng() % n;
        const auto s = random_set(n, rng);
        if (g.count_into(u, s) % 2 == 0)
            continue;
        const auto rep = repr::lazy_rep_pairs(g);
        const GeneratorWord w{graph::self_adjoint_phase(g, s), s};
        worst = std::max(worst, repr::state_vanishing_check(rep, u, w, 1, rng));
        ++lazy_cases;
    }
    std::ostringstream d;
    d << dense_cases << " dense and " << lazy_cases << " lazy cases, max |phi(b)| " << worst;
    return {worst <= 1e-12, d.str()};
}

// Pairs satisfying the local hypothesis: every given
// member keeps an element outside G and the other given members, and the
// universe has room for both rounds of fresh elements.
setfam::FinitePair sample_pair(const setfam::SetFamily& fam, std::mt19937_64& rng, std::size_t& rejected)
{
    const std::size_t m = fam.universe_size();
    while (true) {
        std::set<std::size_t> f;
        std::set<std::size_t> g;
        const std::size_t fs = rng() % 3;
        const std::size_t gs = rng() % 3;
        while (f.size() < fs)
            f.insert(rng() % fam.size());
        while (g.size() < gs)
            g.insert(rng() % m);
        setfam::FinitePair pair{BitVector::from_indices(fam.size(), std::vector<std::size_t>(f.begin(), f.end())),
                                BitVector::from_indices(m, std::vector<std::size_t>(g.begin(), g.end()))};
        bool ok = 2 * std::max(f.size(), g.size()) <= m;
        for (std::size_t x : f) {
            BitVector own = fam.member(x);
            own.and_not(pair.g);
            for (std::size_t y : f)
                if (y != x)
                    own.and_not(fam.member(y));
            ok = ok && own.any();
        }
        if (ok)
            return pair;
        ++rejected;
    }
}

Outcome cofinality()
{
    const auto fam = setfam::SetFamily::nonempty_subsets(5);
    std::mt19937_64 rng(13);
    std::size_t bad = 0;
    std::size_t rejected = 0;
    for (std::size_t t = 0; t < 50; ++t) {
        const auto pair = sample_pair(fam, rng, rejected);
        try {
            const auto ext = setfam::extend_to_full_matrix(fam, pair);
            std::vector<std::size_t> vertices = ext.elements;
            for (std::size_t x : ext.members)
                vertices.push_back(fam.universe_size() + x);
            const Graph sub = setfam::bipartite_graph(fam).induced(vertices);
            const bool ok = setfam::has_pairing_pattern(fam, ext) && pair.f.is_subset_of(ext.pair.f) &&
                            pair.g.is_subset_of(ext.pair.g) && graph::classify(sub).l == 0;
            bad += !ok;
        } catch (const ResourceExhausted&) {
            ++bad;
        }
    }
    return {bad == 0, "50 pairs (" + std::to_string(rejected) + " draws rejected by the hypothesis), " +
                          std::to_string(bad) + " failures"};
}

Operator random_operator(std::size_t dim, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss;
    Operator op(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            op(r, c) = {gauss(rng), gauss(rng)};
    return op;
}

Operator random_unitary(std::mt19937_64& rng)
{
    const Operator a = random_operator(2, rng);
    oracle::CMatrix m(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            m(r, c) = a(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    const Eigen::HouseholderQR<oracle::CMatrix> qr(m);
    const oracle::CMatrix q = qr.householderQ() * oracle::CMatrix::Identity(2, 2);
    Operator u(2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            u(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = q(r, c);
    return u;
}

Outcome tensor_gap()
{
    std::mt19937_64 rng(14);
    std::size_t bad = 0;
    double tightest = 1e9;
    for (std::size_t t = 0; t < 1000; ++t) {
        const auto gap = repr::tensor_gap_bound(random_operator(2, rng), random_operator(2, rng), random_unitary(rng),
                                                random_unitary(rng), 360);
        tightest = std::min(tightest, gap.lhs - (gap.rhs - gap.slack));
        bad += gap.lhs < gap.rhs - gap.slack;
    }
    std::ostringstream d;
    d << "1000 cases, smallest margin " << tightest << ", " << bad << " violations";
    return {bad == 0, d.str()};
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome performance()
{
    std::mt19937_64 rng(15);
    const auto a = gf2::BitMatrix::random_alternating(4096, rng);
    auto start = std::chrono::steady_clock::now();
    const std::size_t r = gf2::rank(a);
    const double rank_time = seconds_since(start);

    const Graph g = Graph::random(1024, 0.5, rng);
    start = std::chrono::steady_clock::now();
    const auto form = graph::canonicalize(g);
    const double canon_time = seconds_since(start);

    std::ostringstream d;
    d << std::fixed << std::setprecision(3) << "rank " << r << " in " << rank_time << " s (limit 5), canonicalize k="
      << form.k << " in " << canon_time << " s (limit 10)";
    return {rank_time < 5.0 && canon_time < 10.0, d.str()};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "four-vertex classification", 1, four_vertex_types},
        {2, "class count n=1..6", 30, class_count},
        {3, "switch-move and congruence agreement", 60, dual_oracle},
        {4, "switch invariance", 0, switch_invariance},
        {5, "representation suite n<=5", 300, representation_suite},
        {6, "bipartite irreducibility", 10, irreducibility},
        {7, "subset-graph isomorphism vs equivalence n<=4", 120, subset_graph_check},
        {8, "level-set family independence", 0, fk_independence},
        {9, "duality", 0, duality},
        {10, "word algebra vs operators", 0, word_oracle},
        {11, "cocycle laws", 0, cocycle_laws},
        {12, "states vanish on anticommuting words", 0, state_vanishing},
        {13, "cofinality extension on 2^Y minus empty, |Y|=5", 0, cofinality},
        {14, "tensor gap sampling", 0, tensor_gap},
        {15, "performance smoke", 0, performance},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = seconds_since(start);
        const bool in_time = c.limit_seconds == 0 || elapsed < c.limit_seconds;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << "  #" << std::setw(2) << c.id << "  " << c.name << ": " << o.detail
                  << "  [" << std::fixed << std::setprecision(2) << elapsed << " s";
        if (c.limit_seconds > 0)
            std::cout << " / limit " << c.limit_seconds << " s";
        std::cout << "]" << std::defaultfloat << std::setprecision(6) << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
