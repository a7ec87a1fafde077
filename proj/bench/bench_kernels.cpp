// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to the
// thread count of interest.

#include <benchmark/benchmark.h>

#include "tailfrac/distributions.hpp"
#include "tailfrac/simulation.hpp"

namespace {

using tailfrac::Family;
using tailfrac::Gpd;
using tailfrac::Seed;
using tailfrac::StudentT;

const Family kGpd = Gpd(0.5, 1.0);
const Family kT = StudentT(2.0);

void BM_SampleSerialGpd(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tailfrac::sample_serial(kGpd, state.range(0), Seed{1}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleParallelGpd(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tailfrac::sample(kGpd, state.range(0), Seed{1}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleSerialStudentT(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tailfrac::sample_serial(kT, state.range(0), Seed{1}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleParallelStudentT(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tailfrac::sample(kT, state.range(0), Seed{1}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ExceedanceSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tailfrac::mc_exceedance_serial(kGpd, 0.5, state.range(0), Seed{1}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ExceedanceParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tailfrac::mc_exceedance(kGpd, 0.5, state.range(0), Seed{1}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ReplicatesSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tailfrac::mc_exceedance_replicates_serial(kGpd, 0.5, 10000, Seed{1}, state.range(0)));
  }
}

void BM_ReplicatesParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tailfrac::mc_exceedance_replicates(kGpd, 0.5, 10000, Seed{1}, state.range(0)));
  }
}

}  // namespace

BENCHMARK(BM_SampleSerialGpd)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_SampleParallelGpd)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_SampleSerialStudentT)->RangeMultiplier(10)->Range(1000, 100000);
BENCHMARK(BM_SampleParallelStudentT)->RangeMultiplier(10)->Range(1000, 100000);
BENCHMARK(BM_ExceedanceSerial)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_ExceedanceParallel)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_ReplicatesSerial)->Arg(8)->Arg(64);
BENCHMARK(BM_ReplicatesParallel)->Arg(8)->Arg(64);

BENCHMARK_MAIN();
