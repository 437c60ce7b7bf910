#include <benchmark/benchmark.h>

#include "coinword/montecarlo.hpp"
#include "coinword/word.hpp"

using namespace coinword;

static void BM_BruteForceSerial(benchmark::State& state) {
    const Word w = Word::parse("HTH");
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_count_serial(w, n, n));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_BruteForceSerial)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_BruteForceParallel(benchmark::State& state) {
    const Word w = Word::parse("HTH");
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_count(w, n, n));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (n - 3)));
}
BENCHMARK(BM_BruteForceParallel)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_TrialsSerial(benchmark::State& state) {
    const TrialConfig cfg{Word::parse("HHH"), static_cast<std::uint64_t>(state.range(0)), 1, kDefaultTossCap};
    for (auto _ : state) benchmark::DoNotOptimize(run_trials_serial(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TrialsSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_TrialsParallel(benchmark::State& state) {
    const TrialConfig cfg{Word::parse("HHH"), static_cast<std::uint64_t>(state.range(0)), 1, kDefaultTossCap};
    for (auto _ : state) benchmark::DoNotOptimize(run_trials(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TrialsParallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
