// Serial versus OpenMP kernels on family members.

#include <benchmark/benchmark.h>

#include "arrcomb/arrangement.hpp"
#include "arrcomb/faces.hpp"
#include "arrcomb/poset.hpp"

using namespace arrcomb;

namespace {

Arrangement instance(int which) {
  switch (which) {
    case 0: return build_family(Family::shi, 4);
    case 1: return build_family(Family::semiorder, 4);
    default: return build_family(Family::catalan, 3, 2);
  }
}

void BM_faces(benchmark::State& state) {
  const Arrangement a = instance(static_cast<int>(state.range(0)));
  const Execution exec = state.range(1) ? Execution::parallel : Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_faces(a, exec));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_poset(benchmark::State& state) {
  const Arrangement a = instance(static_cast<int>(state.range(0)));
  const Execution exec = state.range(1) ? Execution::parallel : Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(build_intersection_poset(a, exec));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_faces)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_poset)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
