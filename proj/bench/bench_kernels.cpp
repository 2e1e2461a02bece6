// Serial references against the OpenMP kernels. Thread count from OMP_NUM_THREADS.
#include "moebius/checks.hpp"
#include "moebius/kernel.hpp"
#include "moebius/sieve.hpp"
#include "moebius/summatory.hpp"
#include "moebius/zeta.hpp"

#include <benchmark/benchmark.h>

using namespace moebius;

static void sieve_serial(benchmark::State& st) {
    const auto n = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(sieve_range_serial(1, n));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

static void sieve_parallel(benchmark::State& st) {
    const auto n = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(sieve_range(1, n));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

static void summatory_ser(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(summatory_serial(double(st.range(0))).M);
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

static void summatory_par(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(summatory(double(st.range(0))).M);
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

static void zeta_first_zero(benchmark::State& st) {
    auto s = ComplexParam::parse("0.5+14.134725141734693790i");
    for (auto _ : st) benchmark::DoNotOptimize(zeta_em(s, 1e-30));
}

static void kernel_q(benchmark::State& st) {
    KernelEvaluator ev(KernelSpec{KernelVariant::Q, ComplexParam::parse("0.5+14.13i")}, 1e-28);
    Real t("7.25");
    for (auto _ : st) benchmark::DoNotOptimize(ev.eval(t));
}

static void check_terre(benchmark::State& st) {
    auto g = Grid::parse("x=2,10,97.5,1000");
    for (auto _ : st) benchmark::DoNotOptimize(run_check("terre", g, RunOptions{static_cast<int>(st.range(0))}).pass);
}

BENCHMARK(sieve_serial)->Arg(1 << 20)->Arg(10000000)->Unit(benchmark::kMillisecond);
BENCHMARK(sieve_parallel)->Arg(1 << 20)->Arg(10000000)->Unit(benchmark::kMillisecond);
BENCHMARK(summatory_ser)->Arg(10000000)->Unit(benchmark::kMillisecond);
BENCHMARK(summatory_par)->Arg(10000000)->Unit(benchmark::kMillisecond);
BENCHMARK(zeta_first_zero)->Unit(benchmark::kMicrosecond);
BENCHMARK(kernel_q)->Unit(benchmark::kMicrosecond);
BENCHMARK(check_terre)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
