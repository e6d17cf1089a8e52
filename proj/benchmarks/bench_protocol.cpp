#include <benchmark/benchmark.h>

#include "ptlab/game_harness.hpp"
#include "ptlab/protocol.hpp"
#include "ptlab/quantum.hpp"

using namespace ptlab;

namespace {

Question edge_question(int n) {
  const Vertex mask = (Vertex{1} << (n / 2)) - 1;  // low N/2 bits set
  return Question(0, mask, n);
}

void BM_RunProtocol(benchmark::State& state) {
  const Question q = edge_question(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto grid = run_protocol(q);
    benchmark::DoNotOptimize(grid);
  }
}
BENCHMARK(BM_RunProtocol)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Arg(32);

void BM_QftMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto u = qft_matrix(n);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_QftMatrix)->Arg(12)->Arg(32);

void BM_ClosedFormGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Question q = edge_question(n);
  for (auto _ : state) {
    double acc = 0.0;
    for (int ja = 0; ja < n; ++ja) {
      for (int jb = 0; jb < n; ++jb) {
        acc += std::norm(closed_form_amplitude(q, ja, jb));
      }
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ClosedFormGrid)->Arg(12)->Arg(32);

void BM_CollisionExact(benchmark::State& state) {
  const Question q = edge_question(12);
  for (auto _ : state) {
    auto prob = collision_probability_exact(q.a, q.b, 12);
    benchmark::DoNotOptimize(prob);
  }
}
BENCHMARK(BM_CollisionExact);

void BM_VerifyExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  VerifyOptions opts;
  opts.mode = VerifyMode::ExactFastPath;
  opts.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto report = verify_exhaustive(n, opts);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyExact)->Args({4, 1})->Args({8, 1})->Args({12, 1})->Args({12, 8})
    ->Unit(benchmark::kMillisecond);

void BM_VerifySimulated(benchmark::State& state) {
  VerifyOptions opts;
  opts.mode = VerifyMode::FullSimulation;
  opts.sim_sample = 200;
  opts.jobs = static_cast<int>(state.range(1));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = verify_exhaustive(n, opts);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifySimulated)->Args({16, 1})->Args({16, 8})->Unit(benchmark::kMillisecond);

}  // namespace
