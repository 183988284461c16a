// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "dgr/checks.hpp"
#include "dgr/constructions.hpp"
#include "dgr/distance.hpp"

namespace {

dgr::Digraph large_digraph(int n) {
  // Long cycle with chords: no masks above 64 vertices, so queue BFS.
  std::vector<dgr::Arc> arcs;
  for (int v = 0; v < n; ++v) {
    arcs.push_back({v, (v + 1) % n});
    arcs.push_back({v, (v * 7 + 3) % n == v ? (v + 2) % n : (v * 7 + 3) % n});
  }
  return dgr::build_digraph(n, arcs);
}

void BM_TransmissionsSerial(benchmark::State& state) {
  const auto d = large_digraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dgr::all_transmissions(d, dgr::Execution::serial));
}

void BM_TransmissionsParallel(benchmark::State& state) {
  const auto d = large_digraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dgr::all_transmissions(d, dgr::Execution::parallel));
}

void BM_SweepOrder4(benchmark::State& state) {
  const dgr::UniversalCheck check{4, {}, dgr::BoundId::size_digraph, std::nullopt};
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dgr::check_universal_bound(check, workers));
}

}  // namespace

BENCHMARK(BM_TransmissionsSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransmissionsParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOrder4)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
