// Serial reference vs OpenMP kernels on the family grid.

#include <benchmark/benchmark.h>

#include "pantslab/family.hpp"
#include "pantslab/intersection.hpp"

using namespace pantslab;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_SelfIntersection(benchmark::State& state) {
  const auto w = gamma_word(family_pair({8, 9}).first);
  for (auto _ : state) {
    benchmark::DoNotOptimize(self_intersection(w, default_ribbon(), exec_of(state)));
  }
  label(state);
}

void BM_ArcSpectrum(benchmark::State& state) {
  const auto w = gamma_word({25, 24, 23});
  const auto search = LiftSearch::for_length(w.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(arc_spectrum(w, search, default_ribbon(), exec_of(state)));
  }
  label(state);
}

void BM_VerifyPairs(benchmark::State& state) {
  std::vector<TriplePair> pairs;
  for (int k : {2, 4, 6, 8}) {
    for (int t : {3, 5, 7, 9}) pairs.push_back(family_pair({k, t}));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_pairs(pairs, std::nullopt, exec_of(state)));
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_SelfIntersection)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArcSpectrum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyPairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
