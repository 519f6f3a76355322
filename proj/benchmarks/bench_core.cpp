#include <benchmark/benchmark.h>

#include "projperm/carlitz.hpp"
#include "projperm/gf.hpp"
#include "projperm/perm.hpp"
#include "projperm/projline.hpp"
#include "projperm/reps.hpp"

#include <random>
#include <vector>

namespace {

using namespace projperm;

Field field_of_order(std::uint32_t q) {
    for (std::uint32_t p = 2;; ++p) {
        if (q % p != 0) continue;
        std::uint32_t n = 0, m = q;
        while (m % p == 0) { m /= p; ++n; }
        return Field(p, n);
    }
}

Permutation seeded_permutation(std::uint32_t q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> t(q);
    for (std::uint32_t i = 0; i < q; ++i) t[i] = i;
    for (std::uint32_t i = q; i > 1; --i)
        std::swap(t[i - 1], t[rng() % i]);
    t.push_back(q);
    return Permutation(std::move(t));
}

void BM_FieldMul(benchmark::State& state) {
    Field f = field_of_order(static_cast<std::uint32_t>(state.range(0)));
    const std::uint32_t q = f.q();
    Elem x = 1;
    for (auto _ : state) {
        x = f.mul(x, 1 + x % (q - 1));
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_FieldMul)->Arg(9)->Arg(64);

void BM_FieldInv0(benchmark::State& state) {
    Field f = field_of_order(static_cast<std::uint32_t>(state.range(0)));
    Elem x = 1;
    for (auto _ : state) {
        x = f.inv0(f.add(x, 1));
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_FieldInv0)->Arg(9)->Arg(64);

void BM_CoefficientMaps(benchmark::State& state) {
    Field f = field_of_order(64);
    std::vector<Elem> shifts = {3, 17, 0, 42, 9, 61, 5, 28};
    for (auto _ : state) {
        auto swaps = shifts_to_swaps(f, shifts);
        auto back = swaps_to_shifts(f, swaps);
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_CoefficientMaps);

void BM_EvalAlgebraic(benchmark::State& state) {
    Field f = field_of_order(9);
    AlgebraicRep rep{Mobius(f, 2, 1, 1, 0), {3, 7, 4, 1}};
    for (auto _ : state) {
        auto p = eval_algebraic(f, rep);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_EvalAlgebraic);

void BM_ChainRewrite(benchmark::State& state) {
    Field f = field_of_order(9);
    AlgebraicRep rep{Mobius(f, 2, 1, 1, 0), {3, 7, 4, 1}};
    for (auto _ : state) {
        auto comb = to_combinatorial(f, rep);
        auto back = to_algebraic(f, comb);
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_ChainRewrite);

void BM_StarFactorize(benchmark::State& state) {
    Field f = field_of_order(9);
    Permutation p = seeded_permutation(9, 0xfeed);
    for (auto _ : state) {
        auto word = star_factorize(p);
        benchmark::DoNotOptimize(word);
    }
}
BENCHMARK(BM_StarFactorize);

void BM_EnumerateMobius(benchmark::State& state) {
    Field f = field_of_order(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        auto pgl = enumerate_mobius(f);
        benchmark::DoNotOptimize(pgl);
    }
}
BENCHMARK(BM_EnumerateMobius)->Arg(5)->Arg(9);

void BM_CarlitzRank(benchmark::State& state) {
    const auto q = static_cast<std::uint32_t>(state.range(0));
    Field f = field_of_order(q);
    Permutation p = seeded_permutation(q, 0xbead);
    for (auto _ : state) {
        auto r = carlitz_rank(f, p);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_CarlitzRank)->Arg(5)->Arg(7)->Arg(9);

void BM_RankOracleQuery(benchmark::State& state) {
    Field f = field_of_order(5);
    RankOracle oracle(f);
    Permutation p = seeded_permutation(5, 0xface);
    for (auto _ : state) {
        auto r = oracle.rank(p, 10);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_RankOracleQuery);

void BM_Decompose(benchmark::State& state) {
    Field f = field_of_order(9);
    Permutation p = seeded_permutation(9, 0xdead);
    for (auto _ : state) {
        auto rep = carlitz_decompose(f, p);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_Decompose);

} // namespace

BENCHMARK_MAIN();
