#include <benchmark/benchmark.h>

#include "prodset/decomposition.hpp"
#include "prodset/rational_set.hpp"
#include "prodset/tau.hpp"

namespace {

using namespace prodset;

void BM_EnumerateFarey(benchmark::State& state) {
    double q = static_cast<double>(state.range(0));
    FareyParams p(q, q);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_farey(p).size());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateFarey)->Arg(100)->Arg(300)->Arg(1000)->Complexity();

void BM_ProductSet(benchmark::State& state) {
    FareyParams p(100, 100);
    auto k = static_cast<std::size_t>(state.range(0));
    RationalSet a = random_subset(p, k, 1);
    RationalSet b = random_subset(p, k, 2);
    for (auto _ : state) benchmark::DoNotOptimize(product_set(a, b).size());
    state.SetItemsProcessed(state.iterations() * k * k);
}
BENCHMARK(BM_ProductSet)->Arg(300)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);

void BM_QuotientSet(benchmark::State& state) {
    FareyParams p(100, 100);
    auto k = static_cast<std::size_t>(state.range(0));
    RationalSet a = random_subset(p, k, 1);
    RationalSet b = random_subset(p, k, 2);
    for (auto _ : state) benchmark::DoNotOptimize(quotient_set(a, b).size());
    state.SetItemsProcessed(state.iterations() * k * k);
}
BENCHMARK(BM_QuotientSet)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
    FareyParams p(50, 50);
    auto k = static_cast<std::size_t>(state.range(0));
    RationalSet a = random_subset(p, k, 1);
    RationalSet b = random_subset(p, k, 2);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(a, b).realized().size());
}
BENCHMARK(BM_Decompose)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_TauSieve(benchmark::State& state) {
    auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(TauTable::build(n).tau_max(n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TauSieve)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond)->Complexity();

}  // namespace

BENCHMARK_MAIN();
