#include <benchmark/benchmark.h>

#include "multiarr/multiarr2.hpp"

namespace {

using namespace multiarr;

Arrangement2 dihedral_like(std::size_t h) {
  const Field q = Field::rationals();
  std::vector<LinearForm2> forms{{q, 1, 0}};
  for (long i = 0; forms.size() < h; ++i) forms.emplace_back(q, i, 1);
  return Arrangement2(std::move(forms));
}

void BM_Exponents(benchmark::State& state) {
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto a = dihedral_like(h);
  const auto m = Multiplicity::constant(h, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(exponents(a, m));
}
BENCHMARK(BM_Exponents)->Args({3, 1})->Args({3, 5})->Args({5, 3})->Args({8, 3})->Args({12, 3});

void BM_Basis(benchmark::State& state) {
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto a = dihedral_like(h);
  const auto m = Multiplicity::constant(h, 3);
  for (auto _ : state) benchmark::DoNotOptimize(basis(a, m));
}
BENCHMARK(BM_Basis)->Arg(3)->Arg(6)->Arg(10);

void BM_ExponentsPrimeField(benchmark::State& state) {
  const Field f = Field::prime(65521);
  const Arrangement2 a({{f, 1, 0}, {f, 0, 1}, {f, 1, 1}, {f, 1, 2}, {f, 1, 3}});
  const auto m = Multiplicity::constant(5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exponents(a, m));
}
BENCHMARK(BM_ExponentsPrimeField)->Arg(2)->Arg(6);

}  // namespace
