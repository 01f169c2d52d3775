// Parallel kernels against their serial references on the same boxes.

#include <benchmark/benchmark.h>

#include "slownim/exceptions.hpp"
#include "slownim/table.hpp"

using namespace slownim;

namespace {

GameSpec spec_for(const benchmark::State& state) {
  return GameSpec::keep_one(static_cast<int>(state.range(0)), Version::misere);
}

void BM_BuildTable(benchmark::State& state) {
  const auto spec = spec_for(state);
  const int cap = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(spec, cap).size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(box_size(spec.n, cap)));
}

void BM_BuildTableSerial(benchmark::State& state) {
  const auto spec = spec_for(state);
  const int cap = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_table_serial(spec, cap).size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(box_size(spec.n, cap)));
}

// The evaluator (and its table) is built once; only the scan is timed.
void BM_ScanBox(benchmark::State& state) {
  const auto spec = spec_for(state);
  const int cap = static_cast<int>(state.range(1));
  Evaluator eval(spec.version, cap);
  eval.table(spec.n);
  for (auto _ : state) benchmark::DoNotOptimize(scan_box(spec, cap, eval).size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(box_size(spec.n, cap)));
}

void BM_ScanBoxSerial(benchmark::State& state) {
  const auto spec = spec_for(state);
  const int cap = static_cast<int>(state.range(1));
  Evaluator eval(spec.version, cap);
  eval.table(spec.n);
  for (auto _ : state) benchmark::DoNotOptimize(scan_box_serial(spec, cap, eval).size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(box_size(spec.n, cap)));
}

void boxes(benchmark::internal::Benchmark* b) {
  b->Args({4, 40})->Args({5, 30})->Args({6, 22})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_BuildTable)->Apply(boxes);
BENCHMARK(BM_BuildTableSerial)->Apply(boxes);
BENCHMARK(BM_ScanBox)->Apply(boxes);
BENCHMARK(BM_ScanBoxSerial)->Apply(boxes);
BENCHMARK_MAIN();
