#include <benchmark/benchmark.h>

#include "maxspec/coverage.hpp"
#include "maxspec/ideals.hpp"
#include "maxspec/rings.hpp"
#include "maxspec/sweep.hpp"
#include "maxspec/topology.hpp"

namespace {

void BM_EnumerateCorpus(benchmark::State& state) {
  const int max_size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto corpus = maxspec::enumerate_corpus(max_size);
    benchmark::DoNotOptimize(corpus);
  }
}
BENCHMARK(BM_EnumerateCorpus)->Arg(5)->Arg(8);

void BM_MaximalTopologyClosure(benchmark::State& state) {
  const auto corpus = maxspec::enumerate_corpus(8);
  for (auto _ : state) {
    for (const auto& d : corpus) {
      const auto jm = maxspec::maximal_topology(d);
      for (const auto& i : maxspec::all_ideals(d)) {
        benchmark::DoNotOptimize(maxspec::j_closure(jm, i));
      }
    }
  }
}
BENCHMARK(BM_MaximalTopologyClosure);

void BM_Reticulation(benchmark::State& state) {
  const auto ring = maxspec::zmod(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxspec::reticulation(ring));
  }
}
BENCHMARK(BM_Reticulation)->Arg(12)->Arg(60);

void BM_SpecSpace(benchmark::State& state) {
  const auto b3 = maxspec::fixtures::b3();
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxspec::spec_space(b3));
  }
}
BENCHMARK(BM_SpecSpace);

void BM_TheoremSweep(benchmark::State& state) {
  const auto corpus = maxspec::sweep::build_corpus(8, 4, 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        maxspec::sweep::run_theorem("conjunctive-iff-coatomistic", corpus));
  }
}
BENCHMARK(BM_TheoremSweep);

}  // namespace

BENCHMARK_MAIN();
