#include <benchmark/benchmark.h>

#include "smp/dynamics.hpp"
#include "smp/dynamo.hpp"
#include "smp/filler.hpp"
#include "smp/search.hpp"

#include <random>

namespace {

smp::TorusGrid random_grid(smp::Topology t, int m, int n, int palette) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(1, palette);
    std::vector<smp::Color> cells(static_cast<std::size_t>(m * n));
    for (auto& c : cells) c = static_cast<smp::Color>(pick(rng));
    return smp::TorusGrid(t, m, n, palette, std::move(cells));
}

void bm_step(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    auto grid = random_grid(smp::Topology::cordalis, side, side, 4);
    for (auto _ : state) benchmark::DoNotOptimize(smp::step(grid));
    state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(bm_step)->Arg(8)->Arg(64)->Arg(256);

void bm_run_construction(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const auto dc = smp::construct_cordalis_dynamo(side, side, 5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(smp::run(dc.grid).rounds);
}
BENCHMARK(bm_run_construction)->Arg(9)->Arg(33);

// Raw engine, as used by the exhaustive searches.
void bm_simulator(benchmark::State& state) {
    const auto grid = random_grid(smp::Topology::mesh, 3, 4, 4);
    smp::Simulator sim(grid.shared_wiring());
    smp::RunOptions ro;
    ro.max_rounds = 24;
    for (auto _ : state) benchmark::DoNotOptimize(sim.run(grid.cells(), ro).rounds);
}
BENCHMARK(bm_simulator);

void bm_filler(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const auto seed = smp::mesh_seed(side, side);
    for (auto _ : state) {
        benchmark::DoNotOptimize(smp::generate_filler(smp::Topology::mesh, side, side, 5, 1, seed).status);
    }
}
BENCHMARK(bm_filler)->Arg(9)->Arg(17);

void bm_search(benchmark::State& state) {
    smp::SearchSpec spec;
    spec.topology = smp::Topology::mesh;
    spec.rows = 3;
    spec.cols = 3;
    spec.palette = 3;
    spec.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(smp::enumerate_min_dynamo(spec).minimum_size);
}
BENCHMARK(bm_search)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
