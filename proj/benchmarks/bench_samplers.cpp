#include <benchmark/benchmark.h>

#include <cstdint>
#include <gfbm/grid.hpp>
#include <gfbm/params.hpp>
#include <gfbm/sample_cholesky.hpp>
#include <gfbm/sample_circulant.hpp>

namespace {

const gfbm::GfbmParams kParams(1.0, 1.0, 0.75);

void BM_CholeskyFactor(benchmark::State& state) {
    auto grid = gfbm::TimeGrid::uniform(1.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        gfbm::CholeskySampler sampler(kParams, grid);
        benchmark::DoNotOptimize(sampler.jitter());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CholeskyFactor)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

void BM_CholeskyPath(benchmark::State& state) {
    auto grid = gfbm::TimeGrid::uniform(1.0, static_cast<std::size_t>(state.range(0)));
    gfbm::CholeskySampler sampler(kParams, grid);
    std::vector<double> path(grid.size());
    std::uint64_t index = 0;
    for (auto _ : state) {
        sampler.generate_path(42, index++, path);
        benchmark::DoNotOptimize(path.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CholeskyPath)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

void BM_CirculantSetup(benchmark::State& state) {
    auto grid = gfbm::TimeGrid::uniform(1.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        gfbm::CirculantSampler sampler(kParams, grid);
        benchmark::DoNotOptimize(sampler.embedding_size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CirculantSetup)->Arg(1024)->Arg(16384)->Arg(262144)->Complexity();

void BM_CirculantPath(benchmark::State& state) {
    auto grid = gfbm::TimeGrid::uniform(1.0, static_cast<std::size_t>(state.range(0)));
    gfbm::CirculantSampler sampler(kParams, grid);
    std::vector<double> path(grid.size());
    std::uint64_t index = 0;
    for (auto _ : state) {
        sampler.generate_path(42, index++, path);
        benchmark::DoNotOptimize(path.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CirculantPath)->Arg(1024)->Arg(16384)->Arg(262144)->Complexity();

}  // namespace
