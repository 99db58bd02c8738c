#include "blockslide/block_decomposition.hpp"
#include "blockslide/capacity.hpp"
#include "blockslide/decision.hpp"
#include "blockslide/generator.hpp"
#include "blockslide/oracle.hpp"
#include "blockslide/structural.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace blockslide;

struct Workload {
    Graph graph;
    TokenSet source;
    TokenSet target;
};

// First seed whose graph packs two sets of `tokens`.
Workload workload(std::size_t blocks, std::size_t tokens)
{
    for (std::uint64_t seed = 1;; ++seed)
        if (auto inst = gen_instance({seed, blocks, 4, tokens}))
            return {std::move(inst->graph), std::move(inst->source), std::move(inst->target)};
}

void BM_Decompose(benchmark::State& state)
{
    const auto w = workload(static_cast<std::size_t>(state.range(0)), 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose(w.graph));
    state.counters["edges"] = static_cast<double>(w.graph.edge_count());
}
BENCHMARK(BM_Decompose)->RangeMultiplier(4)->Range(64, 16384);

void potentials(benchmark::State& state, PotentialMode mode)
{
    const auto blocks = static_cast<std::size_t>(state.range(0));
    const auto w = workload(blocks, blocks / 4);
    const auto bd = decompose(w.graph);
    const auto ua = compute_ua(bd, compute_depths(bd));
    std::size_t passes = 0;
    for (auto _ : state) {
        const auto t = compute_potentials(bd, ua, w.source, {mode, {}});
        passes = t.iteration_count;
        benchmark::DoNotOptimize(t.values.data());
    }
    state.counters["passes"] = static_cast<double>(passes);
    state.counters["pairs"] = static_cast<double>(bd.pair_count());
}

void BM_PotentialsFaithful(benchmark::State& state) { potentials(state, PotentialMode::Faithful); }
void BM_PotentialsAccelerated(benchmark::State& state) { potentials(state, PotentialMode::Accelerated); }
BENCHMARK(BM_PotentialsFaithful)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PotentialsAccelerated)->RangeMultiplier(2)->Range(64, 4096)->Unit(benchmark::kMillisecond);

void BM_Decide(benchmark::State& state)
{
    const auto blocks = static_cast<std::size_t>(state.range(0));
    const auto w = workload(blocks, blocks / 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(decide(w.graph, w.source, w.target));
    state.counters["edges"] = static_cast<double>(w.graph.edge_count());
}
BENCHMARK(BM_Decide)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_OracleEnumerate(benchmark::State& state)
{
    const auto w = workload(6, static_cast<std::size_t>(state.range(0)));
    std::size_t states = 0;
    for (auto _ : state)
        states = enumerate_reachable(w.graph, w.source).size();
    state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_OracleEnumerate)->DenseRange(1, 4);

} // namespace

BENCHMARK_MAIN();
