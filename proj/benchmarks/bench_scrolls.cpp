#include <benchmark/benchmark.h>

#include "scrolls/graph.hpp"
#include "scrolls/sequences.hpp"
#include "scrolls/series.hpp"
#include "scrolls/syzygy.hpp"

using namespace scrolls;

namespace {

const PrimeField F;

ScrollType balanced(int d, int each) { return ScrollType(std::vector<int>(static_cast<std::size_t>(d), each)); }

void BM_GenericSection(benchmark::State& state) {
  const ScrollType a = balanced(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(generic_section(a));
}
BENCHMARK(BM_GenericSection)->DenseRange(2, 8, 2);

void BM_EnumerateSections(benchmark::State& state) {
  const ScrollType a = balanced(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sections(a));
}
BENCHMARK(BM_EnumerateSections)->DenseRange(2, 6);

void BM_ReducibleComponents(benchmark::State& state) {
  const ScrollType a{4, 5, 6, 9};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_reducible_components(a));
}
BENCHMARK(BM_ReducibleComponents);

void BM_SyzygyDegreesRandom(benchmark::State& state) {
  const ScrollType a = balanced(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const SectionForm form = random_section_form(F, a, 1);
  for (auto _ : state) benchmark::DoNotOptimize(syzygy_degrees(form));
}
BENCHMARK(BM_SyzygyDegreesRandom)->Args({3, 4})->Args({4, 4})->Args({5, 4})->Args({4, 8})->Args({6, 6});

void BM_ConstructIrreducible(benchmark::State& state) {
  const ScrollType a{9, 10, 11, 11, 14, 14};
  const ScrollType b{9, 13, 13, 14, 20};
  for (auto _ : state) benchmark::DoNotOptimize(construct_irreducible_form(F, a, b));
}
BENCHMARK(BM_ConstructIrreducible);

void BM_AnalyzeReducible(benchmark::State& state) {
  const SectionForm L = construct_reducible_form(F, {2, 5, 7, 10}, {2, 7, 11}, {1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(analyze_section_form(L));
}
BENCHMARK(BM_AnalyzeReducible);

void BM_SpecializationGraph(benchmark::State& state) {
  const int codim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specialization_graph(codim));
}
BENCHMARK(BM_SpecializationGraph)->Arg(5)->Arg(10)->Arg(15);

}  // namespace
BENCHMARK_MAIN();
