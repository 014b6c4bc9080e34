// Serial reference vs OpenMP kernels. Arg 0 runs serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "qinvar/mub.hpp"
#include "qinvar/sweep.hpp"
#include "qinvar/verify.hpp"

using namespace qinvar;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::kParallel : Execution::kSerial; }

void BM_IsotropicSweep(benchmark::State& state) {
  const SweepAxis axis{"F", 0.0, 1.0, 1001};
  for (auto _ : state) benchmark::DoNotOptimize(isotropic_sweep(axis, mode(state)));
}
BENCHMARK(BM_IsotropicSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DecoherenceSweep(benchmark::State& state) {
  const SweepAxis axis{"", 0.0, 1.0, 101};
  for (auto _ : state)
    benchmark::DoNotOptimize(decoherence_sweep(ChannelKind::kDissipation, axis, axis, mode(state)));
}
BENCHMARK(BM_DecoherenceSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifySuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("eq6", 1, mode(state)));
}
BENCHMARK(BM_VerifySuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyMubs(benchmark::State& state) {
  const MubSet set = build_mubs(27);
  for (auto _ : state) benchmark::DoNotOptimize(state.range(0) ? verify_mubs(set) : verify_mubs_serial(set));
}
BENCHMARK(BM_VerifyMubs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
