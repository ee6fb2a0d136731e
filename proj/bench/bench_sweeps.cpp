#include <benchmark/benchmark.h>

#include "dinf/verify.hpp"

using namespace dinf;

static void BM_crossing_ext(benchmark::State& st) {
  const DiskModel m{2, false};
  const bool par = st.range(1) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(check_crossing_ext(m, st.range(0), par));
}
BENCHMARK(BM_crossing_ext)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_oracle_ext(benchmark::State& st) {
  const DiskModel m{1, st.range(0) != 0};
  for (auto _ : st) benchmark::DoNotOptimize(check_oracle_ext(m, 3));
}
BENCHMARK(BM_oracle_ext)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_fan_mutation(benchmark::State& st) {
  const DiskModel m{static_cast<int>(st.range(0)), false};
  for (auto _ : st) benchmark::DoNotOptimize(check_fan_mutation(m, 3));
}
BENCHMARK(BM_fan_mutation)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
