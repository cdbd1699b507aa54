#include <benchmark/benchmark.h>

#include "bihom/admissibility.hpp"
#include "bihom/constructions.hpp"
#include "bihom/derivations.hpp"
#include "bihom/fixtures.hpp"
#include "bihom/generator.hpp"

using namespace bihom;

static void BM_JacobiTwistedGl11(benchmark::State& state) {
    InstanceGenerator gen(7);
    const BiHomSuperalgebra lie = supercommutator(gen.bihom_associative());
    for (auto _ : state) benchmark::DoNotOptimize(check_bihom_jacobi(lie).holds);
}
BENCHMARK(BM_JacobiTwistedGl11);

static void BM_ClassifySubgroups(benchmark::State& state) {
    const BiHomSuperalgebra a = fixtures::gl11();
    for (auto _ : state) benchmark::DoNotOptimize(classify_subgroups(a).size());
}
BENCHMARK(BM_ClassifySubgroups);

static void BM_DerivationSpace(benchmark::State& state) {
    const BiHomSuperalgebra a = fixtures::affine3(3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(derivation_space(a, 1).total_dim());
}
BENCHMARK(BM_DerivationSpace);

static void BM_Supercommutator(benchmark::State& state) {
    const BiHomSuperalgebra g = fixtures::gl11();
    for (auto _ : state) benchmark::DoNotOptimize(supercommutator(g).dim());
}
BENCHMARK(BM_Supercommutator);

BENCHMARK_MAIN();
