// Microbenchmarks for the hot paths: exhaustive enumeration, adherence
// sweeps, the reflectors, the paving solver against its brute-force
// reference, and the full duality table.  All inputs are fixed seeds so
// runs are comparable.
#include "convlab/harness.hpp"
#include "convlab/reference.hpp"

#include <benchmark/benchmark.h>

using namespace convlab;

namespace {

Space starRegularFour() {
  // topologizing a mid-density random space guarantees star-regularity;
  // random sampling finds no star-regular four-point space that is not
  // already topological, so this is also the representative input
  return reflectorT(randomSpace(0xBE9C4u, 4, 0.5));
}

void BM_EnumerateThreePoints(benchmark::State& state) {
  const CarrierRef car = letterCarrier(3);
  for (auto _ : state) {
    const EnumerationSummary s = summarizeEnumeration(car, GenOrder::sizeAscending);
    benchmark::DoNotOptimize(s.hashSum);
  }
}
BENCHMARK(BM_EnumerateThreePoints);

void BM_AdherenceSweepFivePoints(benchmark::State& state) {
  const Space c = randomSpace(0xAD4E5Eu, 5, 0.5);
  const Mask full = c.carrier()->full();
  for (auto _ : state) {
    Mask acc = 0;
    for (Mask k = 1; k <= full; ++k) acc ^= adherence(c, k);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_AdherenceSweepFivePoints);

void BM_TopologizerFivePoints(benchmark::State& state) {
  const Space c = randomSpace(0x70F0u, 5, 0.5);
  for (auto _ : state) {
    const Space t = reflectorT(c);
    benchmark::DoNotOptimize(t.lim(1));
  }
}
BENCHMARK(BM_TopologizerFivePoints);

void BM_PavingSolverFourPoints(benchmark::State& state) {
  const Space c = randomSpace(0x9A7E0u, 4, 0.6);
  for (auto _ : state)
    for (int x = 0; x < 4; ++x)
      for (PavingKind k :
           {PavingKind::pavement, PavingKind::pseudo, PavingKind::dagger})
        benchmark::DoNotOptimize(pavingNumber(c, x, k).value);
}
BENCHMARK(BM_PavingSolverFourPoints);

void BM_PavingBruteForceFourPoints(benchmark::State& state) {
  const Space c = randomSpace(0x9A7E0u, 4, 0.6);
  for (auto _ : state)
    for (int x = 0; x < 4; ++x)
      for (PavingKind k :
           {PavingKind::pavement, PavingKind::pseudo, PavingKind::dagger})
        benchmark::DoNotOptimize(reference::pavingLiteral(c, x, k).value);
}
BENCHMARK(BM_PavingBruteForceFourPoints);

void BM_DualityTableFourPoints(benchmark::State& state) {
  const Space c = starRegularFour();
  for (auto _ : state) {
    const std::vector<DualityRow> rows = dualityCheck(c);
    benchmark::DoNotOptimize(rows.size());
  }
}
BENCHMARK(BM_DualityTableFourPoints);

}  // namespace

BENCHMARK_MAIN();
