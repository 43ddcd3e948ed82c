#include <benchmark/benchmark.h>

#include "sweepmc/chain.hpp"
#include "sweepmc/ergodicity.hpp"
#include "sweepmc/proof_graph.hpp"
#include "sweepmc/transition_matrix.hpp"

using namespace sweepmc;

static void BM_SweepMatrix(benchmark::State& state) {
    const int rows = static_cast<int>(state.range(0));
    const auto model = BinaryModel::ising(rows, 3, true, 0.5);
    const SweepKernel kernel(model, AcceptanceRule::modified(),
                             SweepOrder::linear(model.site_count()));
    for (auto _ : state) {
        auto T = sweep_matrix(kernel);
        benchmark::DoNotOptimize(T.entries().data());
    }
    state.SetComplexityN(1 << model.site_count());
}
BENCHMARK(BM_SweepMatrix)->Arg(2)->Arg(3)->Complexity();

static void BM_SpectralGap(benchmark::State& state) {
    const int rows = static_cast<int>(state.range(0));
    const auto model = BinaryModel::ising(rows, 3, true, 0.5);
    const SweepKernel kernel(model, AcceptanceRule::modified(),
                             SweepOrder::linear(model.site_count()));
    const auto T = sweep_matrix(kernel);
    for (auto _ : state) {
        auto report = spectral_gap(T);
        benchmark::DoNotOptimize(report.gap);
    }
}
BENCHMARK(BM_SpectralGap)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CheckErgodic(benchmark::State& state) {
    const auto model = BinaryModel::ising(3, 3, true, 0.5);
    const SweepKernel kernel(model, AcceptanceRule::modified(), SweepOrder::chessboard(3, 3));
    for (auto _ : state) {
        auto report = check_ergodic(kernel);
        benchmark::DoNotOptimize(report.ergodic);
    }
    state.SetLabel("3x3 torus");
}
BENCHMARK(BM_CheckErgodic)->Unit(benchmark::kMillisecond);

static void BM_ChainSweeps(benchmark::State& state) {
    const auto model = BinaryModel::ising(4, 4, true, 0.5);
    const SweepKernel kernel(model, AcceptanceRule::modified(),
                             SweepOrder::linear(model.site_count()));
    Philox4x32 rng(1);
    StateIndex x = 0;
    for (auto _ : state) {
        x = kernel.sweep_once(x, rng);
        benchmark::DoNotOptimize(x);
    }
    state.SetItemsProcessed(state.iterations() * model.site_count());
}
BENCHMARK(BM_ChainSweeps);

static void BM_ProofGraphExhaustion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::uint32_t states = 1u << n;
    const std::uint32_t full = (1u << states) - 1;
    for (auto _ : state) {
        int balanced = 0;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            std::vector<StateIndex> subset;
            for (StateIndex v = 0; v < states; ++v)
                if (mask & (1u << v)) subset.push_back(v);
            balanced += degree_balance(edge_set(subset, n)) ? 1 : 0;
        }
        benchmark::DoNotOptimize(balanced);
    }
}
BENCHMARK(BM_ProofGraphExhaustion)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
