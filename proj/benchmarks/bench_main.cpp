#include <benchmark/benchmark.h>

#include "latemb/decide.hpp"
#include "latemb/oracle.hpp"

using namespace latemb;

static void DeterminantE8(benchmark::State& state) {
    const GramMatrix e8 = e8_form(Sign::plus);
    for (auto _ : state) {
        Int det = determinant(e8);
        benchmark::DoNotOptimize(det);
    }
}
BENCHMARK(DeterminantE8);

static void SignatureNormalForm(benchmark::State& state) {
    const GramMatrix g = serre_normal_form(
        {static_cast<int>(state.range()), static_cast<int>(state.range()) + 8,
         Parity::even});
    for (auto _ : state) {
        Inertia in = signature(g);
        benchmark::DoNotOptimize(in);
    }
    state.SetComplexityN(state.range());
}
BENCHMARK(SignatureNormalForm)->RangeMultiplier(2)->Range(2, 16)->Complexity();

static void EnumerateRoots(benchmark::State& state) {
    const GramMatrix e8 = e8_form(Sign::plus);
    for (auto _ : state) {
        auto roots = enumerate_vectors_of_norm(e8, state.range());
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(EnumerateRoots)->Arg(2)->Arg(4)->Arg(6);

static void VerifyCubeEmbedding(benchmark::State& state) {
    const Embedding e = l_matrix(6);
    for (auto _ : state) {
        bool ok = verify(e);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(VerifyCubeEmbedding);

static void ConstructK3SelfEmbedding(benchmark::State& state) {
    const FormInvariants k3{3, 19, Parity::even};
    for (auto _ : state) {
        Embedding e = construct_embedding(k3, k3, 4);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(ConstructK3SelfEmbedding);

static void BruteForceSmall(benchmark::State& state) {
    const GramMatrix gn = GramMatrix::diagonal({Int(1), Int(2)});
    const GramMatrix gm = diag_form(3, 0);
    NormListCache cache(gm);
    for (auto _ : state) {
        SearchOutcome out = brute_force_embedding(gn, gm, 2, 10, &cache);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BruteForceSmall);

BENCHMARK_MAIN();
