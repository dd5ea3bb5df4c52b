#include <benchmark/benchmark.h>

#include <cmath>

#include "coquasi/classify.hpp"
#include "coquasi/cocycle.hpp"
#include "coquasi/exact/cyclotomic.hpp"
#include "coquasi/majid.hpp"

using namespace coquasi;

static void BM_CocycleIdentity(benchmark::State& state) {
  const auto phi = phi_s(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_3cocycle(phi).ok);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(std::pow(state.range(0), 4)));
}
BENCHMARK(BM_CocycleIdentity)->Arg(4)->Arg(8)->Arg(16);

static void BM_RFormSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto phi = phi_s(n, 0).lifted(default_modulus(FiniteAbelianGroup::cyclic(n)));
  for (auto _ : state) benchmark::DoNotOptimize(rform_solutions(phi).count());
}
BENCHMARK(BM_RFormSolve)->Arg(4)->Arg(8);

static void BM_Coboundary(benchmark::State& state) {
  const auto phi = phi_s(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_coboundary(phi).empty());
}
BENCHMARK(BM_Coboundary)->Arg(4)->Arg(6);

static void BM_CycloMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = exact::root_of_unity(n, 1) + exact::Cyclo::one(n);
  const auto b = exact::root_of_unity(n, 3) - exact::Cyclo::from_rational(n, exact::Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul)->Arg(8)->Arg(24)->Arg(60);

static void BM_ShuffleProduct(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const auto g = FiniteAbelianGroup::cyclic(4);
  const HopfQuiver q(RamificationDatum(g, {{1, 2}}));
  RForm r(g, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.set({i, j}, i * j);
  const auto s = MajidStructure::unchecked(q, Associator(g, 2), r, 2 * len);
  const auto p = q.paths_of_length(len).back();
  for (auto _ : state) benchmark::DoNotOptimize(s.shuffle_product(p, p).terms().size());
}
BENCHMARK(BM_ShuffleProduct)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

static void BM_ClassifyZn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = FiniteAbelianGroup::cyclic(n);
  const RamificationDatum ram(g, {{1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(classify_zn(n, ram).forced_s_zero);
}
BENCHMARK(BM_ClassifyZn)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
