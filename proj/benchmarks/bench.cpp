#include <benchmark/benchmark.h>

#include <random>

#include <dyndeg/classify.hpp>
#include <dyndeg/coxeter.hpp>
#include <dyndeg/profile.hpp>

using namespace dyndeg;

namespace {

IntPoly lehmer() { return IntPoly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}); }

void BM_ClassifyLehmer(benchmark::State& state) {
    IntPoly p = lehmer();
    for (auto _ : state) benchmark::DoNotOptimize(classify(p));
}
BENCHMARK(BM_ClassifyLehmer);

void BM_Charpoly(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> entry(-4, 4);
    IntMatrix M(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) M.at(i, j) = entry(rng);
    for (auto _ : state) benchmark::DoNotOptimize(charpoly(M));
}
BENCHMARK(BM_Charpoly)->Arg(4)->Arg(8)->Arg(12);

void BM_UnitDiskCount(benchmark::State& state) {
    IntPoly p = lehmer();
    for (auto _ : state) benchmark::DoNotOptimize(unit_disk_count(p));
}
BENCHMARK(BM_UnitDiskCount);

void BM_RootModuli(benchmark::State& state) {
    IntPoly p = lehmer();
    Rat tol(1, 1000000);
    for (auto _ : state) benchmark::DoNotOptimize(root_moduli(p, tol));
}
BENCHMARK(BM_RootModuli);

void BM_PisotSearch(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pisot_search(degree, 1, true));
}
BENCHMARK(BM_PisotSearch)->Arg(3)->Arg(5);

void BM_MonomialProfile(benchmark::State& state) {
    IntMatrix M = companion(IntPoly({-1, -1, 0, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(monomial_profile(M));
}
BENCHMARK(BM_MonomialProfile);

void BM_WordProducts(benchmark::State& state) {
    WehlerRep rep = wehler_generators(3);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> letter(1, 4);
    std::vector<int> w;
    while (w.size() < 12) {
        int g = letter(rng);
        if (!w.empty() && w.back() == g) continue;
        w.push_back(g);
    }
    CoxeterWord word{w};
    for (auto _ : state) benchmark::DoNotOptimize(word_to_matrix(rep, word));
}
BENCHMARK(BM_WordProducts);

void BM_SalemSearchRank4(benchmark::State& state) {
    WehlerRep rep = wehler_generators(3);
    for (auto _ : state) benchmark::DoNotOptimize(salem_element_search(rep, 5, true));
}
BENCHMARK(BM_SalemSearchRank4);

} // namespace

BENCHMARK_MAIN();
