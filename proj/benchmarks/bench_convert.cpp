#include <benchmark/benchmark.h>

#include "zeck/convert.hpp"
#include "zeck/random.hpp"

namespace {

using namespace zeck;

BitSeq random_bits(Rng& rng, std::size_t n) {
  std::vector<Digit> bits(n);
  bits[0] = 1;
  for (std::size_t i = 1; i < n; ++i) bits[i] = static_cast<Digit>(rng() & 1);
  return BitSeq::from_bits(std::move(bits));
}

void BM_BinaryToZeck(benchmark::State& state) {
  Rng rng(1);
  const BitSeq b = random_bits(rng, static_cast<std::size_t>(state.range(0)));
  pow2_zeck(b.size());
  for (auto _ : state) benchmark::DoNotOptimize(binary_to_zeck(b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BinaryToZeck)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNSquared);

void BM_ZeckToBinary(benchmark::State& state) {
  Rng rng(2);
  const ZeckSeq z = random_zeck(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zeck_to_binary(z));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ZeckToBinary)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_Greedy(benchmark::State& state) {
  Rng rng(3);
  const Natural v = value(random_zeck(rng, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_zeckendorf(v));
}
BENCHMARK(BM_Greedy)->RangeMultiplier(4)->Range(16, 4096);

void BM_Value(benchmark::State& state) {
  Rng rng(4);
  const ZeckSeq z = random_zeck(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(value(z));
}
BENCHMARK(BM_Value)->RangeMultiplier(10)->Range(100, 100000);

}  // namespace

BENCHMARK_MAIN();
