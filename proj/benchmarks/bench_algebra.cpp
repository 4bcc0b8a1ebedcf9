#include "ncwell/bopp.hpp"
#include "ncwell/hamiltonian.hpp"
#include "ncwell/symbols.hpp"
#include "ncwell/weyl.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ncwell;

void bm_normal_order_power(benchmark::State& state) {
    auto alg = AlgebraSpec::canonical();
    auto x = WeylElement::generator(alg, Gen::X);
    auto px = WeylElement::generator(alg, Gen::Px);
    auto base = x + px;
    const int exponent = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(base.pow(exponent));
    }
}
BENCHMARK(bm_normal_order_power)->Arg(4)->Arg(8)->Arg(12);

void bm_image_commutators(benchmark::State& state) {
    for (auto _ : state) {
        auto map = BoppMap::nc_to_aux(MapMode::Full);
        benchmark::DoNotOptimize(image_commutators(map));
    }
}
BENCHMARK(bm_image_commutators);

void bm_transform_pipeline(benchmark::State& state) {
    for (auto _ : state) {
        auto hf = transform_hamiltonian(build_hamiltonian(PotentialKind::GravityOscillator),
                                        BoppMap::aux_to_nc(MapMode::Full));
        benchmark::DoNotOptimize(hf);
    }
}
BENCHMARK(bm_transform_pipeline);

void bm_momentum_shift(benchmark::State& state) {
    auto hf = transform_hamiltonian(build_hamiltonian(PotentialKind::GravityOscillator),
                                    BoppMap::aux_to_nc(MapMode::Full));
    for (auto _ : state) {
        benchmark::DoNotOptimize(momentum_shift(hf, ShiftKind::Eq17));
    }
}
BENCHMARK(bm_momentum_shift);

void bm_series_expansion(benchmark::State& state) {
    auto th = ScalarCoefficient::symbol(sym::theta);
    auto et = ScalarCoefficient::symbol(sym::eta);
    auto m = ScalarCoefficient::symbol(sym::mass);
    auto k = ScalarCoefficient::symbol(sym::k);
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand_C_series(k, m, th, et, order));
    }
}
BENCHMARK(bm_series_expansion)->Arg(2)->Arg(4)->Arg(6);

// Rational-function canonicalization with a common cubic factor: dominated
// by the polynomial gcd.
void bm_coefficient_reduction(benchmark::State& state) {
    auto hb = ScalarCoefficient::symbol(sym::hbar);
    auto th = ScalarCoefficient::symbol(sym::theta);
    auto et = ScalarCoefficient::symbol(sym::eta);
    auto m = ScalarCoefficient::symbol(sym::mass);
    auto mix = hb + ScalarCoefficient::rational(1, 3) * th + ScalarCoefficient::rational(2, 7) * et;
    auto cube = mix * mix * mix;
    auto num = cube * (hb - th);
    auto den = cube * (et + m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(num / den);
    }
}
BENCHMARK(bm_coefficient_reduction);

} // namespace

BENCHMARK_MAIN();
