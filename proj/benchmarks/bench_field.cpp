#include <benchmark/benchmark.h>

#include "polsphere/measures.hpp"
#include "polsphere/qfunction.hpp"
#include "polsphere/random_states.hpp"
#include "polsphere/sphere_grid.hpp"
#include "polsphere/state.hpp"

using namespace polsphere;

namespace {

PolarizationState bench_state(int ts_max) {
    StateSampler sampler(99);
    return sampler.random_multi_sector_state(HalfInteger::from_twice(ts_max));
}

void bm_evaluate_field(benchmark::State& state) {
    const int ts = int(state.range(0));
    const PolarizationState psi = bench_state(ts);
    const SphereGrid grid = build_grid(HalfInteger::from_twice(ts));
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_field(psi, grid, -1, 1));
    state.SetItemsProcessed(int64_t(state.iterations()) * grid.n_nodes());
}
BENCHMARK(bm_evaluate_field)->Arg(2)->Arg(6)->Arg(12);

void bm_evaluate_field_threaded(benchmark::State& state) {
    const PolarizationState psi = bench_state(10);
    const SphereGrid grid = build_grid(HalfInteger::from_twice(10));
    const int threads = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_field(psi, grid, -1, threads));
}
BENCHMARK(bm_evaluate_field_threaded)->Arg(1)->Arg(2)->Arg(4);

void bm_area_report(benchmark::State& state) {
    const int ts = int(state.range(0));
    const PolarizationState psi = bench_state(ts);
    const SphereGrid grid = build_grid(HalfInteger::from_twice(ts));
    for (auto _ : state)
        benchmark::DoNotOptimize(area_report(psi, grid));
}
BENCHMARK(bm_area_report)->Arg(2)->Arg(6);

void bm_extract_multipoles(benchmark::State& state) {
    const PolarizationState psi = bench_state(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_multipoles(psi));
}
BENCHMARK(bm_extract_multipoles)->Arg(4)->Arg(12);

} // namespace

BENCHMARK_MAIN();
