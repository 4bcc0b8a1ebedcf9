#include "ncwell/airy.hpp"
#include "ncwell/diagonalize.hpp"
#include "ncwell/params.hpp"
#include "ncwell/perturbation.hpp"
#include "ncwell/property_suite.hpp"
#include "ncwell/spectrum.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ncwell;

void bm_airy_value(benchmark::State& state) {
    double z = -5.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(airy_ai(z));
    }
}
BENCHMARK(bm_airy_value);

void bm_airy_zero(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(airy_zero(n));
    }
}
BENCHMARK(bm_airy_zero)->Arg(1)->Arg(5)->Arg(20);

void bm_well_spectrum(benchmark::State& state) {
    PhysicalParams p;
    p.m = codata::neutron_mass;
    p.g = codata::standard_gravity;
    const int levels = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gravity_well_spectrum(p, levels));
    }
}
BENCHMARK(bm_well_spectrum)->Arg(1)->Arg(5)->Arg(25);

void bm_diagonalize_oracle(benchmark::State& state) {
    PhysicalParams p;
    p.m = 1.0;
    p.hbar = 1.0;
    p.g = 0.0;
    p.k = 1.0;
    p.eta = 2e-3;
    const int basis = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(diagonalize_oracle(p, basis));
    }
}
BENCHMARK(bm_diagonalize_oracle)->Arg(8)->Arg(12)->Arg(16);

void bm_perturbation_shifts(benchmark::State& state) {
    PhysicalParams p;
    p.m = 1.0;
    p.hbar = 1.0;
    p.g = 0.0;
    p.k = 1.0;
    p.eta = 2e-3;
    auto states = complete_shells(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(perturbation_shifts(p, states));
    }
}
BENCHMARK(bm_perturbation_shifts);

void bm_property_suite(benchmark::State& state) {
    const int instances = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_property_suite(instances));
    }
}
BENCHMARK(bm_property_suite)->Arg(5)->Arg(20);

} // namespace

BENCHMARK_MAIN();
