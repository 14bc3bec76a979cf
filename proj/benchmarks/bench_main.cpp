#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "arcseries/arc_ideals.hpp"
#include "arcseries/groebner.hpp"
#include "arcseries/partitions.hpp"
#include "arcseries/rr_recursion.hpp"
#include "arcseries/series.hpp"

using namespace arcs;

namespace {

void BM_BuchbergerNfold(benchmark::State& state) {
    const std::uint32_t n = 3;
    const std::uint32_t bound = static_cast<std::uint32_t>(state.range(0));
    std::vector<Polynomial> gens = jet_generators(nfold_spec(n, bound));
    for (auto _ : state) {
        TruncatedBasis basis = buchberger_truncated(gens, bound);
        benchmark::DoNotOptimize(basis.elements.size());
    }
}
BENCHMARK(BM_BuchbergerNfold)->Arg(9)->Arg(12)->Arg(15)
    ->Unit(benchmark::kMillisecond);

void BM_StaircaseSeries(benchmark::State& state) {
    const std::uint32_t N = static_cast<std::uint32_t>(state.range(0));
    MonomialIdeal ideal = staircase_ideal(1, N);
    std::vector<VarId> vars;
    for (std::uint32_t i = 1; i <= N; ++i) vars.push_back(yvar(i));
    for (auto _ : state) {
        TruncatedSeries s = standard_monomial_series(ideal, vars, N);
        benchmark::DoNotOptimize(s[N]);
    }
}
BENCHMARK(BM_StaircaseSeries)->Arg(100)->Arg(300)
    ->Unit(benchmark::kMillisecond);

void BM_GordonCount(benchmark::State& state) {
    const std::uint32_t M = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        std::vector<Int> counts = count_gordon_upto(M, 8);
        benchmark::DoNotOptimize(counts.back());
    }
}
BENCHMARK(BM_GordonCount)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_SeriesMultiply(benchmark::State& state) {
    const std::uint32_t N = static_cast<std::uint32_t>(state.range(0));
    TruncatedSeries a = restricted_product(N, 1, {});
    TruncatedSeries b = restricted_product(N, 2, {0});
    for (auto _ : state) {
        TruncatedSeries c = a * b;
        benchmark::DoNotOptimize(c[N]);
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(500)->Arg(2000)
    ->Unit(benchmark::kMillisecond);

void BM_BellPolynomial(benchmark::State& state) {
    const std::uint32_t i = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        Polynomial p = bell(i, i / 2);
        benchmark::DoNotOptimize(p.terms().size());
    }
}
BENCHMARK(BM_BellPolynomial)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
