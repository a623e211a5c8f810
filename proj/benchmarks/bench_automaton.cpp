#include <benchmark/benchmark.h>

#include "zeck/automaton.hpp"
#include "zeck/random.hpp"

namespace {

using namespace zeck;

template <PassId P>
void BM_Scan(benchmark::State& state) {
  Rng rng(1);
  const auto in = random_pass_input(P, rng, static_cast<std::size_t>(state.range(0)));
  const Transducer& t = transducer_for(P);
  for (auto _ : state) benchmark::DoNotOptimize(run_scan(t, in));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Scan<PassId::stage1>)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_Scan<PassId::stage2_rl>)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_Scan<PassId::signed_prelim>)->RangeMultiplier(10)->Range(1000, 1000000);

// Args: length, chunk, threads.
template <PassId P>
void BM_Prefix(benchmark::State& state) {
  Rng rng(2);
  const auto in = random_pass_input(P, rng, static_cast<std::size_t>(state.range(0)));
  const Transducer& t = transducer_for(P);
  const auto chunk = static_cast<std::size_t>(state.range(1));
  const auto threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(run_parallel_prefix(t, in, chunk, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["states"] = static_cast<double>(t.state_count());
}
BENCHMARK(BM_Prefix<PassId::stage1>)
    ->ArgsProduct({{1000, 100000}, {1, 64, 4096}, {1, 4}})
    ->UseRealTime();
BENCHMARK(BM_Prefix<PassId::stage2_rl>)
    ->ArgsProduct({{1000, 100000}, {64}, {1, 4}})
    ->UseRealTime();

void BM_Compile(benchmark::State& state) {
  const auto pass = static_cast<PassId>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compile_pass(pass));
}
BENCHMARK(BM_Compile)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
