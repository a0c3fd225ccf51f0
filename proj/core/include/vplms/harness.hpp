#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vplms/algorithm.hpp"
#include "vplms/signal.hpp"

namespace vplms {

struct ExperimentConfig {
    Scenario scenario;
    std::vector<AlgorithmConfig> algorithms;
    std::size_t n_trials = 200;
    std::uint64_t master_seed = 1;
    std::size_t steady_state_window = 100;
};

/// Synthetic data shared by every algorithm of one trial.
struct TrialData {
    std::vector<SparseSystem> systems;  // one per segment
    std::vector<double> input;          // all segments concatenated
    std::vector<double> noise;
};

TrialData make_trial_data(const ExperimentConfig& config, std::size_t trial_index);

struct AlgorithmTrace {
    std::vector<double> sq_deviation;  // ||w_true - w_k||^2 after each update
    std::vector<double> p;             // exponent applied at each update
    std::vector<double> delta;         // delta after each iteration's schedule update
};

struct TrialResult {
    std::size_t trial_index = 0;
    std::vector<AlgorithmTrace> traces;  // parallel to config.algorithms
};

/// Observer called for every (algorithm, iteration) with the regressor and
/// desired output the filter saw. Test hook; empty by default.
using TrialProbe = std::function<void(std::size_t algorithm, std::size_t iteration,
                                      std::span<const double> x, double y,
                                      std::span<const double> true_weights)>;

/// Runs every algorithm over one trial's realization. Throws DivergenceError
/// naming the algorithm and iteration when a filter blows up.
TrialResult run_trial(const ExperimentConfig& config, std::size_t trial_index,
                      const TrialProbe& probe = {});

struct AlgorithmAggregate {
    std::string name;
    std::vector<double> msd;
    std::vector<double> mean_p;
    std::vector<double> mean_delta;
    std::vector<double> steady_state_msd;  // per segment, linear
};

struct AggregateResult {
    std::vector<AlgorithmAggregate> algorithms;
    std::vector<std::size_t> segment_offsets;
    std::vector<std::size_t> segment_lengths;
    std::size_t steady_state_window = 0;
    std::size_t n_trials = 0;

    const AlgorithmAggregate& algorithm(std::string_view name) const;
};

/// Trial-mean of the per-trial traces. Trials may run on n_threads workers;
/// the reduction order is always trial 0, 1, 2, ...
AggregateResult run_experiment(const ExperimentConfig& config, std::size_t n_threads = 1);

/// Averages already-computed trials in the given order.
AggregateResult aggregate(const ExperimentConfig& config, std::span<const TrialResult> trials);

/// Mean MSD over the final steady_state_window iterations of a segment.
double steady_state_msd(const AggregateResult& agg, std::string_view algorithm, std::size_t segment);

/// Same quantity computed from a raw curve.
double tail_mean(std::span<const double> curve, std::size_t segment_offset, std::size_t segment_length,
                 std::size_t window);

/// 10 log10(msd).
double to_db(double msd) noexcept;

}  // namespace vplms
