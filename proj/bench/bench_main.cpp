// Serial reference versus OpenMP kernels: quandle enumeration, labelled
// counting and the verification suites.
#include <benchmark/benchmark.h>

#include "qnd/enumerate.hpp"
#include "qnd/verify.hpp"

namespace {

qnd::Execution mode(benchmark::State const& state) {
  return state.range(1) ? qnd::Execution::parallel : qnd::Execution::serial;
}

void BM_EnumerateQuandles(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qnd::enumerate_quandles(n, mode(state)));
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_CountLabeled(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qnd::count_labeled_quandles(n, mode(state)));
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_Verify(benchmark::State& state) {
  qnd::VerifyOptions options;
  options.max_order = static_cast<std::size_t>(state.range(0));
  options.execution = mode(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qnd::run_verification(options));
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_EnumerateQuandles)
    ->ArgsProduct({{5, 6}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountLabeled)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
