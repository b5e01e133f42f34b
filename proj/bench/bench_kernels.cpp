// Serial reference vs OpenMP kernels.
//
//   gwh_bench --benchmark_filter=CharTable

#include <benchmark/benchmark.h>

#include "gwh/characters.hpp"
#include "gwh/hurwitz.hpp"
#include "gwh/permutations.hpp"

namespace {

void BM_CharTable(benchmark::State& state, gwh::Exec exec) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gwh::character_table(n, exec));
}

void BM_MonodromyTuples(benchmark::State& state, gwh::Exec exec) {
  const int n = static_cast<int>(state.range(0));
  const gwh::SymmetricGroup group(n);
  // genus-0 target, 2n - 2 simple branch points: the connected genus-0 count
  const std::vector<gwh::Partition> profiles(static_cast<std::size_t>(2 * n - 2), gwh::simple_profile(n));
  for (auto _ : state) benchmark::DoNotOptimize(gwh::count_monodromy_tuples(group, 0, profiles, true, exec));
}

void BM_HurwitzGenus1(benchmark::State& state, gwh::Exec exec) {
  gwh::HurwitzProblem p;
  p.genus = 1;
  p.degree = static_cast<int>(state.range(0));
  p.profiles = {gwh::simple_profile(p.degree)};
  for (auto _ : state) benchmark::DoNotOptimize(gwh::hurwitz_disconnected_enumerated(p, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_CharTable, serial, gwh::Exec::serial)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CharTable, parallel, gwh::Exec::parallel)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MonodromyTuples, serial, gwh::Exec::serial)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MonodromyTuples, parallel, gwh::Exec::parallel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HurwitzGenus1, serial, gwh::Exec::serial)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HurwitzGenus1, parallel, gwh::Exec::parallel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
