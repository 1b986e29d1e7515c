#include "dcore/kernels.hpp"
#include "dcore/verify.hpp"

#include <benchmark/benchmark.h>

using namespace dcore;

namespace {

std::vector<kernels::GridPoint> grid(int nmax, int dmax)
{
    std::vector<kernels::GridPoint> out;
    for (int n = 2; n <= nmax; ++n)
        for (int d = 1; d <= dmax; ++d)
            out.push_back({n, d});
    return out;
}

void BM_PowerSumsSerial(benchmark::State& state)
{
    const auto g = compute_G(static_cast<int>(state.range(0)), 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::power_sums_serial(g, 8));
    state.counters["terms"] = static_cast<double>(g.terms().size());
}

void BM_PowerSumsParallel(benchmark::State& state)
{
    const auto g = compute_G(static_cast<int>(state.range(0)), 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::power_sums_parallel(g, 8));
    state.counters["terms"] = static_cast<double>(g.terms().size());
}

void BM_PremomentGridSerial(benchmark::State& state)
{
    const auto points = grid(static_cast<int>(state.range(0)), 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::premoment_grid_serial(points, 6));
}

void BM_PremomentGridParallel(benchmark::State& state)
{
    const auto points = grid(static_cast<int>(state.range(0)), 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::premoment_grid_parallel(points, 6));
}

void BM_VerifyGrid(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_grid(static_cast<int>(state.range(0)), 3));
}

} // namespace

BENCHMARK(BM_PowerSumsSerial)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PowerSumsParallel)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PremomentGridSerial)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PremomentGridParallel)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyGrid)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
