#include <benchmark/benchmark.h>

#include "brcov/covers.hpp"
#include "brcov/lattice.hpp"
#include "brcov/lowindex.hpp"

using namespace brcov;

static void BM_LowIndexFree2(benchmark::State& state) {
  const Presentation f2 = Presentation::free_group(2);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(low_index_tables(f2, k));
}
BENCHMARK(BM_LowIndexFree2)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_LowIndexKleinBottle(benchmark::State& state) {
  const Presentation p = parse_presentation("gens a,b; rels a b a^-1 b");
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(low_index_tables(p, k));
}
BENCHMARK(BM_LowIndexKleinBottle)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_BruteForceFree2(benchmark::State& state) {
  const Presentation f2 = Presentation::free_group(2);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_tables(f2, k));
}
BENCHMARK(BM_BruteForceFree2)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ToddCoxeterZ2(benchmark::State& state) {
  const Presentation z2 = Presentation::free_abelian(2);
  const auto n = state.range(0);
  const auto subgroup = parse_word_list(z2, "a^" + std::to_string(n) + ", b^" + std::to_string(n));
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(z2, subgroup));
  state.SetLabel("index " + std::to_string(n * n));
}
BENCHMARK(BM_ToddCoxeterZ2)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_EnumerateSublattices(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sublattices(n, k));
}
BENCHMARK(BM_EnumerateSublattices)->Args({2, 100})->Args({3, 64})->Args({4, 32})->Unit(benchmark::kMicrosecond);

static void BM_ClassifyCross(benchmark::State& state) {
  const Presentation z2 = Presentation::free_abelian(2);
  const Constraints c = Constraints::all_branched(z2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_covers(z2, c));
}
BENCHMARK(BM_ClassifyCross)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
