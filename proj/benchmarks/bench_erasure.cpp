#include <benchmark/benchmark.h>

#include "martex/erasure.hpp"
#include "martex/generators.hpp"
#include "martex/support.hpp"

using namespace martex;

namespace {

Support trinomial_ladder(long n) {
    HkParams params;
    params.a = Rational(10);
    params.b = Rational(20);
    for (long i = 0; i < n; ++i) {
        HkParams::Inner inner;
        inner.x = Rational(10) + Rational(10 * i + 5, n + 1) / Rational(10);
        inner.p = Rational(9) - Rational(i, 1) / Rational(n + 1);
        inner.q = Rational(30) - Rational(i, 1) / Rational(n + 1);
        params.inner.push_back(inner);
    }
    return gen_hk_trinomial(params);
}

} // namespace

static void ErasureFixpoint(benchmark::State& state) {
    Support s = trinomial_ladder(state.range(0));
    for (auto _ : state) {
        auto trace = erasure_fixpoint(s);
        benchmark::DoNotOptimize(trace.fully_erasable);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(ErasureFixpoint)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void TwoLinkPeeling(benchmark::State& state) {
    Support s = trinomial_ladder(state.range(0));
    for (auto _ : state) {
        auto ordering = find_2link_ordering(s);
        benchmark::DoNotOptimize(ordering.has_value());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(TwoLinkPeeling)->RangeMultiplier(2)->Range(4, 64)->Complexity();
