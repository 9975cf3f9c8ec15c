#include <benchmark/benchmark.h>

#include "polsphere/angular.hpp"

using namespace polsphere;

namespace {

void bm_clebsch_gordan(benchmark::State& state) {
    const int tj = int(state.range(0));
    const HalfInteger j = HalfInteger::from_twice(tj);
    const HalfInteger J = HalfInteger::from_twice(tj);
    // exercise a generic mid-table coefficient, not a stretched edge case
    const HalfInteger m1 = HalfInteger::from_twice(tj % 2);
    const HalfInteger m2 = HalfInteger::from_twice(-(tj % 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(clebsch_gordan(j, m1, j, m2, J, HalfInteger::from_twice(0)));
}
BENCHMARK(bm_clebsch_gordan)->Arg(2)->Arg(8)->Arg(20)->Arg(40);

void bm_cg_stretched(benchmark::State& state) {
    const int ts = int(state.range(0));
    const HalfInteger s = HalfInteger::from_twice(ts);
    for (auto _ : state)
        for (int k = 0; k <= ts; ++k)
            benchmark::DoNotOptimize(cg_stretched(s, k));
}
BENCHMARK(bm_cg_stretched)->Arg(4)->Arg(16)->Arg(40);

void bm_wigner_small_d(benchmark::State& state) {
    const int tj = int(state.range(0));
    const HalfInteger j = HalfInteger::from_twice(tj);
    const double theta = 0.7;
    for (auto _ : state)
        for (int tm = -tj; tm <= tj; tm += 2)
            benchmark::DoNotOptimize(
                wigner_small_d(j, HalfInteger::from_twice(tm),
                               HalfInteger::from_twice(-tj), theta));
}
BENCHMARK(bm_wigner_small_d)->Arg(2)->Arg(10)->Arg(24);

void bm_harmonic_table(benchmark::State& state) {
    const int l_max = int(state.range(0));
    for (auto _ : state) {
        SphericalHarmonicTable table(l_max, 1.1);
        benchmark::DoNotOptimize(table.legendre(l_max, l_max / 2));
    }
}
BENCHMARK(bm_harmonic_table)->Arg(4)->Arg(16)->Arg(64);

} // namespace

BENCHMARK_MAIN();
