#include <kummerscan/monotone.hpp>
#include <kummerscan/ratios.hpp>
#include <kummerscan/sfcore.hpp>

#include <benchmark/benchmark.h>

using namespace ks;

static void BM_Kummer1F1(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    const unsigned bits = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        auto r = sfcore::kummer_1f1({1, 3, x}, bits);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_Kummer1F1)->Args({1, 128})->Args({50, 128})->Args({50, 512})->Args({1000, 256});

static void BM_RegLowerGamma(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto r = sfcore::reg_lower_gamma(5, x, 128);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_RegLowerGamma)->Arg(1)->Arg(100);

static void BM_FRatio(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto r = ratios::f_ratio(3, x, 128);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_FRatio)->Arg(1)->Arg(30)->Arg(100);

static void BM_RatioDerivative(benchmark::State& state) {
    const auto spec = ratios::RatioSpec::habc(2, 6, 1.5);
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto r = ratios::ratio_derivative(spec, x, 128);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_RatioDerivative)->Arg(1)->Arg(30);

static void BM_CheckMonotoneCell(benchmark::State& state) {
    monotone::MonotoneConfig cfg;
    cfg.initial_samples = static_cast<int>(state.range(0));
    const auto spec = ratios::RatioSpec::habc(1, 4, 1);
    for (auto _ : state) {
        auto rep = monotone::check_monotone(spec, 0, 50, cfg);
        benchmark::DoNotOptimize(rep.verdict);
    }
}
BENCHMARK(BM_CheckMonotoneCell)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
