#include <benchmark/benchmark.h>

#include "multiarr/lattice.hpp"

namespace {

using namespace multiarr;

Arrangement2 a2() {
  const Field q = Field::rationals();
  return Arrangement2({{q, 1, 0}, {q, 0, 1}, {q, 1, 1}});
}

void BM_DeltaTable(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) {
    DeltaTable table(LatticeRegion(a2(), {cap, cap, cap}), 1);
    benchmark::DoNotOptimize(table.points().size());
  }
}
BENCHMARK(BM_DeltaTable)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_VerifyStr(benchmark::State& state) {
  const DeltaTable table(LatticeRegion(a2(), {5, 5, 5}), 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_str(table).verified);
}
BENCHMARK(BM_VerifyStr)->Unit(benchmark::kMillisecond);

}  // namespace
