#include "k3fib/engine.hpp"
#include "k3fib/fibgen.hpp"
#include "k3fib/salem.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace k3fib;

static void BM_GenFibDoubling(benchmark::State& state) {
    const GenFibParams p(1);
    for (auto _ : state) benchmark::DoNotOptimize(gen_fib(p, state.range(0)));
}
BENCHMARK(BM_GenFibDoubling)->RangeMultiplier(10)->Range(100, 1000000);

static void BM_GenFibNaive(benchmark::State& state) {
    const GenFibParams p(1);
    for (auto _ : state) benchmark::DoNotOptimize(gen_fib_naive(p, state.range(0)));
}
BENCHMARK(BM_GenFibNaive)->RangeMultiplier(10)->Range(100, 100000);

static void BM_Membership(benchmark::State& state) {
    const GenFibParams p(1);
    const Integer n = gen_fib(p, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(classify_membership(p, n));
}
BENCHMARK(BM_Membership)->Arg(100)->Arg(1000)->Arg(10000);

static std::pair<IntPolynomial, IntPolynomial> random_pair(int degree) {
    std::mt19937 rng(42);
    const auto make = [&] {
        std::vector<Integer> c;
        for (int i = 0; i <= degree; ++i) c.emplace_back(static_cast<long>(rng() % 101) - 50);
        c.back() = 1;
        return IntPolynomial(std::move(c));
    };
    auto p = make();
    return {p, make()};
}

static void BM_ResultantSylvester(benchmark::State& state) {
    const auto [p, q] = random_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(resultant_sylvester(p, q));
}
BENCHMARK(BM_ResultantSylvester)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_ResultantSubresultant(benchmark::State& state) {
    const auto [p, q] = random_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(resultant_subresultant(p, q));
}
BENCHMARK(BM_ResultantSubresultant)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_Candidates(benchmark::State& state) {
    const auto m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(generator_candidates(m, 1));
}
BENCHMARK(BM_Candidates)->Arg(3)->Arg(61)->Arg(401)->Arg(570601);
BENCHMARK_MAIN();
