#include <benchmark/benchmark.h>

#include "gcon/chambers.hpp"
#include "gcon/stability.hpp"
#include "gcon/tautological.hpp"

namespace {

using namespace gcon;

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void bm_enumerate_stairs(benchmark::State& state) {
  const GroupOrder k(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_stairs(k, exec_of(state)));
  label(state);
}

void bm_enumerate_chambers(benchmark::State& state) {
  const GroupOrder k(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(k, exec_of(state)));
  label(state);
}

void bm_genericity(benchmark::State& state) {
  const GroupOrder k(static_cast<int>(state.range(1)));
  const StabilityCondition theta = hilbert_theta(k);
  for (auto _ : state) benchmark::DoNotOptimize(genericity(theta, exec_of(state)));
  label(state);
}

void bm_tautological(benchmark::State& state) {
  const GroupOrder k(static_cast<int>(state.range(1)));
  const std::vector<Chamber> chambers = enumerate_chambers(k, Exec::parallel);
  for (auto _ : state) benchmark::DoNotOptimize(verify_tautological_all(chambers, exec_of(state)));
  label(state);
}

void bm_simple_chambers(benchmark::State& state) {
  const GroupOrder k(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_simple_chambers(k, exec_of(state)));
  label(state);
}

}  // namespace

BENCHMARK(bm_enumerate_stairs)->ArgsProduct({{0, 1}, {12, 16}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_enumerate_chambers)->ArgsProduct({{0, 1}, {6, 7}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_genericity)->ArgsProduct({{0, 1}, {8, 10}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_tautological)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_simple_chambers)->ArgsProduct({{0, 1}, {6}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
