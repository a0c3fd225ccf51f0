#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "vplms/algorithm.hpp"
#include "vplms/config.hpp"
#include "vplms/harness.hpp"

namespace {

std::vector<double> random_vector(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<double> v(n);
    for (auto& x : v) x = g(rng);
    return v;
}

void BM_LpPenalty(benchmark::State& state) {
    const auto w = random_vector(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(vplms::lp_penalty(w, 0.5, {5e-5, 0.05}));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LpPenalty)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_Step(benchmark::State& state) {
    const auto preset = vplms::load_preset("paper_fig1");
    const auto& algo = preset.algorithms[static_cast<std::size_t>(state.range(0))];
    const auto x = random_vector(16, 2);
    vplms::FilterState f = vplms::FilterState::zeros(16);
    f.weights = random_vector(16, 3);
    vplms::PScheduleState sched = algo.initial_schedule(0.02);
    std::size_t j = 0;
    for (auto _ : state) {
        auto r = vplms::step(std::move(f), sched, {x, 0.1}, algo, 10 + (j++ % 190));
        f = std::move(r.state);
        sched = r.schedule;
        benchmark::DoNotOptimize(f.weights.data());
    }
    state.SetLabel(algo.name);
}
BENCHMARK(BM_Step)->DenseRange(0, 2);

void BM_RunTrial(benchmark::State& state) {
    const auto config = vplms::load_preset("paper_fig1");
    std::size_t t = 0;
    for (auto _ : state) benchmark::DoNotOptimize(vplms::run_trial(config, t++));
}
BENCHMARK(BM_RunTrial)->Unit(benchmark::kMillisecond);

void BM_PaperFig1(benchmark::State& state) {
    const auto config = vplms::load_preset("paper_fig1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(vplms::run_experiment(config, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_PaperFig1)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(3)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
