#include <benchmark/benchmark.h>

#include <gfbm/kernel.hpp>
#include <gfbm/params.hpp>

namespace {

const gfbm::GfbmParams kParams(1.0, 1.0, 0.75);

void BM_Covariance(benchmark::State& state) {
    double s = 0.3, t = 1.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gfbm::covariance(kParams, s, t));
        s += 1e-9;  // defeat constant folding
    }
}
BENCHMARK(BM_Covariance);

void BM_IncrementSecondMoment(benchmark::State& state) {
    double s = 0.3, t = 1.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gfbm::increment_second_moment(kParams, s, t));
        t += 1e-9;
    }
}
BENCHMARK(BM_IncrementSecondMoment);

void BM_StationaryAutocovariance(benchmark::State& state) {
    // Large-lag case exercises the cancellation-free second difference.
    std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gfbm::r_b(0.75, n));
    }
}
BENCHMARK(BM_StationaryAutocovariance)->Arg(2)->Arg(1 << 10)->Arg(1 << 20);

void BM_ShiftedIncrementAutocovariance(benchmark::State& state) {
    std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gfbm::r_z(kParams, 100.0, n));
    }
}
BENCHMARK(BM_ShiftedIncrementAutocovariance)->Arg(2)->Arg(1 << 10)->Arg(1 << 20);

void BM_IncrementDensity(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gfbm::increment_density(kParams, 1.0, 2.0, x));
        x += 1e-9;
    }
}
BENCHMARK(BM_IncrementDensity);

}  // namespace
