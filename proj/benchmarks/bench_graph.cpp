#include <benchmark/benchmark.h>

#include "ptlab/hadamard_graph.hpp"

using namespace ptlab;

namespace {

void BM_Neighbors(benchmark::State& state) {
  const GraphSpec g(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto nb = neighbors(0, g);
    benchmark::DoNotOptimize(nb);
  }
}
BENCHMARK(BM_Neighbors)->Arg(12)->Arg(16);

void BM_ConnectedComponents(benchmark::State& state) {
  const GraphSpec g(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto report = connected_components(g);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_ConnectedComponents)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_FranklAlpha(benchmark::State& state) {
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto alpha = frankl_alpha(k);
    benchmark::DoNotOptimize(alpha);
  }
}
BENCHMARK(BM_FranklAlpha)->Arg(3)->Arg(9)->Arg(25);

void BM_ExactChromaticG4(benchmark::State& state) {
  const GraphSpec g(4);
  const auto vertices = all_vertices(g);
  for (auto _ : state) {
    auto chi = exact_chromatic_number(vertices, g, 8);
    benchmark::DoNotOptimize(chi);
  }
}
BENCHMARK(BM_ExactChromaticG4)->Unit(benchmark::kMillisecond);

}  // namespace
