#include <benchmark/benchmark.h>

#include "qaffine/random.hpp"
#include "qaffine/suites.hpp"

using namespace qaffine;

namespace {

std::pair<AlgebraElement, AlgebraElement> operands(int terms) {
  Rng rng(17);
  return {randomElement(rng, 6, terms), randomElement(rng, 6, terms)};
}

void BM_mulSerial(benchmark::State& state) {
  const auto [f, g] = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mulSerial(f, g));
}

void BM_mulParallel(benchmark::State& state) {
  const auto [f, g] = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mulParallel(f, g));
}

void BM_suite(benchmark::State& state, const char* id, RunMode mode) {
  const Suite s = suitesFor(id).front();
  for (auto _ : state) benchmark::DoNotOptimize(runSuite(s, mode));
}

}  // namespace

BENCHMARK(BM_mulSerial)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_mulParallel)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK_CAPTURE(BM_suite, AC3_serial, "AC3", RunMode::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_suite, AC3_parallel, "AC3", RunMode::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_suite, AC5_serial, "AC5", RunMode::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_suite, AC5_parallel, "AC5", RunMode::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
