/* Hot-path timings: group closure, censuses, the XOR magic estimate and the
   Dicke closed form. Run manually; not part of the test suite. */

#include <benchmark/benchmark.h>

#include "stabatlas/census.hpp"
#include "stabatlas/dicke.hpp"
#include "stabatlas/group.hpp"
#include "stabatlas/magic.hpp"
#include "stabatlas/spectrum.hpp"

using namespace stabatlas;

static void closure_single_qubit(benchmark::State& state) {
    auto gens = generators_from({Gen::H1, Gen::P1});
    for (auto _ : state) {
        GroupTable g = close_subgroup(gens, true);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(closure_single_qubit);

static void closure_entangling(benchmark::State& state) {
    auto gens = generators_from({Gen::H1, Gen::H2, Gen::C12, Gen::C21});
    for (auto _ : state) {
        GroupTable g = close_subgroup(gens, true);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(closure_entangling);

static void census_n(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Census c = stabilizer_census(n);
        benchmark::DoNotOptimize(c.rows.size());
    }
}
BENCHMARK(census_n)->Arg(2)->Arg(3)->Arg(4);

static void m2_xor_estimate(benchmark::State& state) {
    const int rank = static_cast<int>(state.range(0));
    std::vector<double> vals(static_cast<std::size_t>(rank));
    double sum = 0;
    for (int i = 0; i < rank; ++i) sum += vals[static_cast<std::size_t>(i)] = 1.0 / (i + 1);
    for (auto& v : vals) v /= sum;
    Spectrum spec = Spectrum::from_values(vals);
    for (auto _ : state) benchmark::DoNotOptimize(m2_spectrum_estimate(spec));
}
BENCHMARK(m2_xor_estimate)->Arg(8)->Arg(16)->Arg(32);

static void dicke_entropy_vector_closed_form(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        EntropyVector ev = dicke_entropy_vector(n, n / 2);
        benchmark::DoNotOptimize(ev.s.size());
    }
}
BENCHMARK(dicke_entropy_vector_closed_form)->Arg(8)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
