#include <benchmark/benchmark.h>

#include <random>

#include "clq/families.hpp"
#include "clq/ratfct.hpp"
#include "clq/rewrite.hpp"

using namespace clq;

namespace {

void BM_EnumerateNC(benchmark::State& state) {
    const FamilySpec spec = make_family("NC", parse_magma_spec("N2"));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_dims(spec, n));
}
BENCHMARK(BM_EnumerateNC)->DenseRange(4, 8, 2);

void BM_EnumerateAcyclic(benchmark::State& state) {
    const FamilySpec spec = make_family("Acy", parse_magma_spec("D0"));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_dims(spec, n));
}
BENCHMARK(BM_EnumerateAcyclic)->DenseRange(3, 5);

void BM_Compose(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const int n = static_cast<int>(state.range(0));
    const Clique p = random_integer_clique(rng, n, -2, 2), q = random_integer_clique(rng, n, -2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(compose(p, n / 2 + 1, q));
}
BENCHMARK(BM_Compose)->RangeMultiplier(2)->Range(2, 32);

void BM_NormalizeArity4(benchmark::State& state) {
    const auto trees = all_binary_trees(parse_magma_spec("N2"), 4);
    for (auto _ : state)
        for (const auto& t : trees) benchmark::DoNotOptimize(normalize(t));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trees.size()));
}
BENCHMARK(BM_NormalizeArity4);

void BM_FracMap(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const int n = static_cast<int>(state.range(0));
    const Clique p = random_integer_clique(rng, n, -2, 2);
    const FracMap F = FracMap::identity();
    for (auto _ : state) benchmark::DoNotOptimize(F(p).expand());
}
BENCHMARK(BM_FracMap)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
