#include <benchmark/benchmark.h>

#include <complex>

#include "fmzv/genfun.hpp"
#include "fmzv/hatu.hpp"
#include "fmzv/reduction.hpp"
#include "fmzv/trunc_zeta.hpp"

namespace {

void BM_zeta_trunc_exact_dp(benchmark::State& state) {
    const fmzv::Index k{2, -1, 3};
    const std::uint64_t b = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fmzv::zeta_trunc_exact(k, {0, b}));
    }
}
BENCHMARK(BM_zeta_trunc_exact_dp)->Arg(50)->Arg(200)->Arg(1000);

void BM_zeta_trunc_bruteforce(benchmark::State& state) {
    const fmzv::Index k{2, -1, 3};
    const std::uint64_t b = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fmzv::zeta_trunc_bruteforce(k, {0, b}));
    }
}
BENCHMARK(BM_zeta_trunc_bruteforce)->Arg(20)->Arg(50)->Arg(100);

void BM_zeta_trunc_mod(benchmark::State& state) {
    const fmzv::Index k{2, -1, 3};
    const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fmzv::zeta_trunc_mod(k, p, 3, {0, p}));
    }
}
BENCHMARK(BM_zeta_trunc_mod)->Arg(97)->Arg(499)->Arg(997);

void BM_reduce_full(benchmark::State& state) {
    const fmzv::Index k{-2, 1, -1, static_cast<std::int64_t>(-state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fmzv::reduce_full(k));
    }
}
BENCHMARK(BM_reduce_full)->Arg(1)->Arg(3)->Arg(5);

void BM_p_table(benchmark::State& state) {
    const unsigned r = static_cast<unsigned>(state.range(0));
    const unsigned kmax = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fmzv::p_table(r, kmax));
    }
}
BENCHMARK(BM_p_table)->Args({1, 4})->Args({2, 3})->Args({3, 2});

void BM_gr_closed_form(benchmark::State& state) {
    const unsigned r = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fmzv::gr_closed_form(r, 5));
    }
}
BENCHMARK(BM_gr_closed_form)->Arg(1)->Arg(2)->Arg(3);

void BM_hurwitz_series(benchmark::State& state) {
    const std::vector<std::complex<double>> s{{6.0, 0.0}, {7.0, 0.3}};
    const std::uint64_t N = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fmzv::hurwitz_mzv_series(s, {0.25, 0.0}, N));
    }
}
BENCHMARK(BM_hurwitz_series)->Arg(1000)->Arg(10000)->Arg(100000);

} // namespace

BENCHMARK_MAIN();
