#include <benchmark/benchmark.h>

#include "martex/generators.hpp"

using namespace martex;

static void MotLpVertex(benchmark::State& state) {
    auto [mu, nu] = gen_random_instance(11, static_cast<size_t>(state.range(0)) / 2,
                                        static_cast<size_t>(state.range(0)));
    CostFunction cost = CostFunction::preset(CostFunction::Kind::AbsDiff);
    for (auto _ : state) {
        auto lp = solve_mot_lp(mu, nu, cost, Sense::Min);
        benchmark::DoNotOptimize(lp.objective);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(MotLpVertex)->DenseRange(4, 12, 2)->Complexity();
