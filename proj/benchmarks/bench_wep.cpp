#include <benchmark/benchmark.h>

#include "martex/generators.hpp"
#include "martex/support.hpp"
#include "martex/wep.hpp"

using namespace martex;

namespace {

// chained binomial tree: n meshes, consecutive meshes share one y point
Support chained_tree(long n) {
    std::vector<Path> paths;
    for (long i = 0; i < n; ++i) {
        Rational x(2 * i + 1, 2);
        paths.push_back({x, Rational(i)==Rational(0) ? Rational(1,3) : Rational(i)});
        paths.push_back({x, Rational(i + 1)});
    }
    return Support(std::move(paths));
}

} // namespace

static void WepRankOracle(benchmark::State& state) {
    Support s = chained_tree(state.range(0));
    for (auto _ : state) {
        auto r = wep_holds(s);
        benchmark::DoNotOptimize(r.holds);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(WepRankOracle)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void WepDecomposeChain(benchmark::State& state) {
    Support s = chained_tree(state.range(0));
    SplitMix64 rng(7);
    PathFunction f;
    for (const auto& p : s.paths())
        f[p] = Rational(static_cast<long>(rng.below(19)) - 9);
    for (auto _ : state) {
        auto d = wep_decompose(s, f);
        benchmark::DoNotOptimize(d.index());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(WepDecomposeChain)->RangeMultiplier(2)->Range(4, 64)->Complexity();
