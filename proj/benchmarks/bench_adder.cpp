#include <benchmark/benchmark.h>

#include "zeck/adder.hpp"
#include "zeck/random.hpp"
#include "zeck/signed.hpp"

namespace {

using namespace zeck;

void BM_Add(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const ZeckSeq a = random_zeck(rng, n);
  const ZeckSeq b = random_zeck(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(add(a, b));
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Add)->RangeMultiplier(10)->Range(10, 1000000)->Complexity(benchmark::oN);

void BM_Subtract(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const SignedZeck a(random_zeck(rng, n));
  const SignedZeck b(random_zeck(rng, n));
  for (auto _ : state) benchmark::DoNotOptimize(subtract(a, b));
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Subtract)->RangeMultiplier(10)->Range(10, 1000000)->Complexity(benchmark::oN);

template <PassId P>
void BM_DirectPass(benchmark::State& state) {
  Rng rng(3);
  const auto in = random_pass_input(P, rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(direct_pass(P, in));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DirectPass<PassId::stage1>)->Arg(1000)->Arg(100000);
BENCHMARK(BM_DirectPass<PassId::stage2_rl>)->Arg(1000)->Arg(100000);
BENCHMARK(BM_DirectPass<PassId::stage2_lr>)->Arg(1000)->Arg(100000);
BENCHMARK(BM_DirectPass<PassId::signed_prelim>)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
