#include <benchmark/benchmark.h>

#include "multiarr/arr3.hpp"

namespace {

using namespace multiarr;

Arrangement3 braid() {
  const Field q = Field::rationals();
  return Arrangement3({{q, 1, 0, 0}, {q, 0, 1, 0}, {q, 0, 0, 1}, {q, 1, -1, 0}, {q, 1, 0, -1}, {q, 0, 1, -1}});
}

Arrangement3 grid(long n) {
  const Field q = Field::rationals();
  std::vector<LinearForm3> forms{{q, 0, 0, 1}};
  for (long i = 0; i < n; ++i) {
    forms.emplace_back(q, 1, 0, -i);
    forms.emplace_back(q, 0, 1, -i);
  }
  return Arrangement3(std::move(forms));
}

void BM_CharPolyBraid(benchmark::State& state) {
  const auto a = braid();
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_CharPolyBraid);

void BM_CharPolyGrid(benchmark::State& state) {
  const auto a = grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_CharPolyGrid)->Arg(3)->Arg(6)->Arg(10);

void BM_IsFree(benchmark::State& state) {
  const auto a = grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_free(a).free);
}
BENCHMARK(BM_IsFree)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
