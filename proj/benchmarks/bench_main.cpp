#include <benchmark/benchmark.h>

#include "swob/charseries.hpp"
#include "swob/obstruction.hpp"
#include "swob/segre.hpp"

using namespace swob;

static void BM_schur_to_poly(benchmark::State& state) {
    const auto parts = partitions_of(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& p : parts) benchmark::DoNotOptimize(schur_to_poly(p));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(parts.size()));
}
BENCHMARK(BM_schur_to_poly)->Arg(8)->Arg(12);

static void BM_poly_to_schur(benchmark::State& state) {
    const Mod2Poly p = steenrod_sq(2, schur_to_poly(Partition{4, 3, 2, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(poly_to_schur(p));
}
BENCHMARK(BM_poly_to_schur);

static void BM_kappa_rp(benchmark::State& state) {
    const ManifoldModel m = rp(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kappa_bruteforce(m, SingularityFamily::a2()));
}
BENCHMARK(BM_kappa_rp)->Arg(20)->Arg(32)->Arg(40);

static void BM_kappa_product(benchmark::State& state) {
    const ManifoldModel m = product(rp(4, "x"), rp(6, "y"));
    for (auto _ : state) benchmark::DoNotOptimize(kappa_bruteforce(m, SingularityFamily::sigma(2)));
}
BENCHMARK(BM_kappa_product);

static void BM_ssw_sigma2(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ssw_sigma(2, 0, d, true));
}
BENCHMARK(BM_ssw_sigma2)->Arg(12)->Arg(20);

static void BM_rp_inverse(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(rp(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_rp_inverse)->Arg(437)->Arg(1024);

static void BM_charseries_pipeline(benchmark::State& state) {
    for (auto _ : state)
        for (const auto& e : catalog()) benchmark::DoNotOptimize(dold_reduce(chi_series(hat_w(e.ssw, 6), 6)));
}
BENCHMARK(BM_charseries_pipeline);

BENCHMARK_MAIN();
