#include <benchmark/benchmark.h>

#include "scalab/asymptotics.hpp"
#include "scalab/bench.hpp"
#include "scalab/laws.hpp"
#include "scalab/lu_oracle.hpp"
#include "scalab/overhead.hpp"

namespace {

void BM_Speedup(benchmark::State& st) {
  const auto m = scalab::laws::sun_ni(0.1, 2.0);
  scalab::PuCount n = 2;
  for (auto _ : st) {
    benchmark::DoNotOptimize(scalab::speedup(m, n));
    n = n % 100000 + 2;
  }
}
BENCHMARK(BM_Speedup);

void BM_Classify(benchmark::State& st) {
  const auto m = scalab::laws::gustafson(0.3);
  for (auto _ : st) benchmark::DoNotOptimize(scalab::classify(m));
}
BENCHMARK(BM_Classify);

void BM_GReduced(benchmark::State& st) {
  const auto z1 = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(scalab::lu::h_hat(1 << 20, z1));
}
BENCHMARK(BM_GReduced)->Arg(100)->Arg(10000)->Arg(100000);

void BM_OptimalN(benchmark::State& st) {
  const scalab::ScalabilityModel m(scalab::WorkloadSplit(0.0), scalab::PowerLaw::unit(),
                                   scalab::PowerLaw::unit(), scalab::PowerLaw::linear());
  const scalab::OverheadPoly z(0.01, 1.0, true);
  for (auto _ : st) {
    benchmark::DoNotOptimize(scalab::optimal_n(m, z, scalab::Objective::Time, st.range(0)));
  }
}
BENCHMARK(BM_OptimalN)->Arg(1000)->Arg(100000);

void BM_LuParallel(benchmark::State& st) {
  const auto workers = static_cast<int>(st.range(0));
  const auto batch = scalab::bench::random_lu_batch(4, 128, 7, 1, 1000);
  for (auto _ : st) benchmark::DoNotOptimize(scalab::bench::lu_parallel(batch, 128, workers));
}
BENCHMARK(BM_LuParallel)->Arg(1)->Arg(2)->UseRealTime();

void BM_Matmul(benchmark::State& st) {
  const auto workers = static_cast<int>(st.range(0));
  const auto a = scalab::bench::random_int_matrix(128, 128, 1, -1000, 1000);
  const auto b = scalab::bench::random_int_matrix(128, 128, 2, -1000, 1000);
  for (auto _ : st) {
    benchmark::DoNotOptimize(scalab::bench::matmul_parallel(a, b, 128, 128, 128, workers));
  }
}
BENCHMARK(BM_Matmul)->Arg(1)->Arg(2)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
