#include <benchmark/benchmark.h>

#include "zeck/arith.hpp"
#include "zeck/fibcodec.hpp"
#include "zeck/random.hpp"

namespace {

using namespace zeck;

void BM_MulFenwick(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const ZeckSeq a = random_zeck(rng, n);
  const ZeckSeq b = random_zeck(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(mul_fenwick(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulFenwick)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_MulBinary(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const ZeckSeq a = random_zeck(rng, n);
  const ZeckSeq b = random_zeck(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(mul_binary(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MulBinary)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_DivRem(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const ZeckSeq x = random_zeck(rng, 2 * n);
  const ZeckSeq d = random_zeck(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(divrem(x, d));
}
BENCHMARK(BM_DivRem)->RangeMultiplier(4)->Range(16, 1024);

void BM_SqrtRem(benchmark::State& state) {
  Rng rng(3);
  const ZeckSeq x = random_zeck(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sqrt_rem(x));
}
BENCHMARK(BM_SqrtRem)->RangeMultiplier(4)->Range(16, 2048);

void BM_CodecRoundTrip(benchmark::State& state) {
  Rng rng(4);
  std::vector<Natural> values;
  for (int i = 0; i < state.range(0); ++i) values.push_back(value(random_zeck(rng, 1 + rng() % 60)));
  for (auto _ : state) benchmark::DoNotOptimize(decode_stream(encode_stream(values)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CodecRoundTrip)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
