#include <benchmark/benchmark.h>

#include "sdgame/game.hpp"
#include "sdgame/metrics.hpp"
#include "sdgame/simulate.hpp"

namespace {

using namespace sdg;

EpidemicState peak_state() {
    EpidemicState st;
    st.s = 0.5885;
    st.i = 0.1233;
    st.q = 0.1656;
    st.r = 0.1226;
    return st;
}

void BM_TransmissionForce(benchmark::State& state) {
    const EpidemicState st = peak_state();
    const ActivityProfile a = ActivityProfile::grouped(0.5, 1.0);
    const ModelParams p;
    for (auto _ : state) {
        benchmark::DoNotOptimize(transmission_force(st, a, p));
    }
}
BENCHMARK(BM_TransmissionForce);

void BM_Rk4Day(benchmark::State& state) {
    const EpidemicState st = peak_state();
    const ActivityProfile a = ActivityProfile::grouped(0.5, 1.0);
    const ModelParams p;
    for (auto _ : state) {
        benchmark::DoNotOptimize(step_with_flows(st, a, p, 1.0, 10, false));
    }
}
BENCHMARK(BM_Rk4Day);

void BM_SolvePure(benchmark::State& state) {
    const Policy policy{0.8, 0.8};
    const GameContext ctx = GameContext::from_state(peak_state(), ModelParams{}, policy);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_equilibrium(ctx, policy));
    }
}
BENCHMARK(BM_SolvePure);

void BM_SolveMixed(benchmark::State& state) {
    const Policy policy{0.01, 0.8}; // lands in the mixed regime at this state
    const GameContext ctx = GameContext::from_state(peak_state(), ModelParams{}, policy);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_equilibrium(ctx, policy));
    }
}
BENCHMARK(BM_SolveMixed);

void BM_SimulateYear(benchmark::State& state) {
    SimulationConfig cfg;
    cfg.policy = Policy{0.4, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(total_infections(simulate(cfg)));
    }
}
BENCHMARK(BM_SimulateYear)->Unit(benchmark::kMillisecond);

void BM_BestResponseOracle(benchmark::State& state) {
    const Policy policy{0.2, 0.5};
    const GameContext ctx = GameContext::from_state(peak_state(), ModelParams{}, policy);
    for (auto _ : state) {
        benchmark::DoNotOptimize(best_response_oracle(0.3, ctx, policy, state.range(0)));
    }
}
BENCHMARK(BM_BestResponseOracle)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
