#include "ccrgraph/gf2.hpp"
#include "ccrgraph/repr.hpp"
#include "ccrgraph/setfam.hpp"
#include "ccrgraph/switching.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace ccrgraph;

static void BM_Gf2Rank(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    const auto a = gf2::BitMatrix::random_alternating(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(gf2::rank(a));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gf2Rank)->RangeMultiplier(2)->Range(64, 4096)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_Canonicalize(benchmark::State& state)
{
    std::mt19937_64 rng(2);
    const auto g = graph::Graph::random(static_cast<std::size_t>(state.range(0)), 0.5, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(graph::canonicalize(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Canonicalize)->RangeMultiplier(2)->Range(16, 1024)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_CongruentCanonicalize(benchmark::State& state)
{
    std::mt19937_64 rng(3);
    const auto g = graph::Graph::random(static_cast<std::size_t>(state.range(0)), 0.5, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(gf2::congruent_canonicalize(g.adjacency()));
}
BENCHMARK(BM_CongruentCanonicalize)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

static void BM_ReprVerify(benchmark::State& state)
{
    std::mt19937_64 rng(4);
    const auto g = graph::Graph::random(static_cast<std::size_t>(state.range(0)), 0.5, rng);
    const auto rep = repr::rep_canonical(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(repr::verify_relations(rep));
}
BENCHMARK(BM_ReprVerify)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_LazyApplyWord(benchmark::State& state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto rep = repr::lazy_rep_bipartite(setfam::SetFamily::power_set(n));
    graph::GeneratorWord w{graph::Phase::one(), graph::VertexSet(rep.strings.size())};
    for (std::size_t v = 0; v < rep.strings.size(); v += 3)
        w.support.set(v);
    std::vector<repr::Complex> state_vec(rep.dim(), repr::Complex{1.0});
    for (auto _ : state)
        benchmark::DoNotOptimize(repr::apply_word(rep, w, state_vec));
}
BENCHMARK(BM_LazyApplyWord)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
