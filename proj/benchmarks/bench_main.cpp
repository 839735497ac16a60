// Micro-benchmarks for the hot paths: exact relation calculus (adjoint,
// compose), full pair analysis on seeded random instances, the simplicial
// mesh pipeline, and the floating-point cross-check.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "hodgepair/crosscheck.hpp"
#include "hodgepair/pair.hpp"
#include "hodgepair/random.hpp"
#include "hodgepair/relation.hpp"
#include "hodgepair/rng.hpp"
#include "hodgepair/simplicial.hpp"
#include "hodgepair/verifier.hpp"

namespace {

hodgepair::RandomPairProfile medium_profile() {
    hodgepair::RandomPairProfile profile;
    profile.dims = {3, 5, 4, 2};
    profile.cohomology = {1, 1, 1, 1};
    profile.density = hodgepair::Rational(1, 2);
    return profile;
}

hodgepair::SimplicialComplex annulus() {
    return hodgepair::make_complex({{0, 1, 3},
                                    {1, 3, 4},
                                    {1, 2, 4},
                                    {2, 4, 5},
                                    {0, 2, 5},
                                    {0, 3, 5}});
}

void bm_adjoint(benchmark::State& state) {
    const hodgepair::LinearRelation t = hodgepair::random_relation(
        static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 17);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hodgepair::adjoint(t));
    }
}
BENCHMARK(bm_adjoint)->Arg(3)->Arg(6);

void bm_compose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const hodgepair::LinearRelation t = hodgepair::random_relation(n, n, 5);
    const hodgepair::LinearRelation s = hodgepair::adjoint(t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hodgepair::compose(s, t));
    }
}
BENCHMARK(bm_compose)->Arg(3)->Arg(6);

void bm_pair_analysis(benchmark::State& state) {
    const hodgepair::ComplexPair pair =
        hodgepair::generate_random_pair(medium_profile(), 31);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hodgepair::analyze(pair));
    }
}
BENCHMARK(bm_pair_analysis);

void bm_statement_suite(benchmark::State& state) {
    const hodgepair::ComplexPair pair =
        hodgepair::generate_random_pair(medium_profile(), 31);
    const auto& statements = hodgepair::all_statements();
    for (auto _ : state) {
        const hodgepair::Verifier verifier(pair);
        benchmark::DoNotOptimize(verifier.verify_all(statements));
    }
}
BENCHMARK(bm_statement_suite);

void bm_mesh_pipeline(benchmark::State& state) {
    const hodgepair::SimplicialComplex k = annulus();
    for (auto _ : state) {
        const hodgepair::ComplexPair pair =
            hodgepair::cochain_pair(k, hodgepair::boundary_subcomplex(k));
        benchmark::DoNotOptimize(hodgepair::analyze(pair));
    }
}
BENCHMARK(bm_mesh_pipeline);

void bm_crosscheck(benchmark::State& state) {
    const hodgepair::ComplexPair pair =
        hodgepair::generate_random_pair(medium_profile(), 31);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hodgepair::crosscheck_backend(pair, 1e-9));
    }
}
BENCHMARK(bm_crosscheck);

void bm_random_generation(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            hodgepair::generate_random_pair(medium_profile(), ++seed));
    }
}
BENCHMARK(bm_random_generation);

}  // namespace

BENCHMARK_MAIN();
