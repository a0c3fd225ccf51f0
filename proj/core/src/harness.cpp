#include "vplms/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "vplms/error.hpp"

namespace vplms {

namespace {

enum class Purpose : std::uint64_t { System = 0, Input = 1, Noise = 2 };

std::uint64_t stream_id(std::size_t trial, std::size_t segment, Purpose purpose) {
    return (static_cast<std::uint64_t>(trial) << 32) | (static_cast<std::uint64_t>(segment) << 8) |
           static_cast<std::uint64_t>(purpose);
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

}  // namespace

TrialData make_trial_data(const ExperimentConfig& config, std::size_t trial_index) {
    const Scenario& sc = config.scenario;
    TrialData data;
    data.systems.reserve(sc.segments.size());
    data.input.reserve(sc.total_length());
    data.noise.reserve(sc.total_length());
    for (std::size_t s = 0; s < sc.segments.size(); ++s) {
        const ScenarioSegment& seg = sc.segments[s];
        RngStream sys_rng(config.master_seed, stream_id(trial_index, s, Purpose::System));
        RngStream in_rng(config.master_seed, stream_id(trial_index, s, Purpose::Input));
        RngStream noise_rng(config.master_seed, stream_id(trial_index, s, Purpose::Noise));
        data.systems.push_back(gen_sparse_system(sc.n_taps, seg.nnz, sys_rng));
        const auto x = gen_gaussian(seg.length, sc.input_variance, in_rng);
        const auto n = gen_gaussian(seg.length, sc.noise_variance, noise_rng);
        data.input.insert(data.input.end(), x.begin(), x.end());
        data.noise.insert(data.noise.end(), n.begin(), n.end());
    }
    return data;
}

TrialResult run_trial(const ExperimentConfig& config, std::size_t trial_index, const TrialProbe& probe) {
    const Scenario& sc = config.scenario;
    const TrialData data = make_trial_data(config, trial_index);
    const std::size_t total = sc.total_length();

    TrialResult result;
    result.trial_index = trial_index;
    result.traces.resize(config.algorithms.size());

    std::vector<double> x(sc.n_taps);
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        const AlgorithmConfig& algo = config.algorithms[a];
        AlgorithmTrace& trace = result.traces[a];
        trace.sq_deviation.reserve(total);
        trace.p.reserve(total);
        trace.delta.reserve(total);

        FilterState state = FilterState::zeros(sc.n_taps);
        std::size_t k = 0;
        for (std::size_t s = 0; s < sc.segments.size(); ++s) {
            const SparseSystem& truth = data.systems[s];
            PScheduleState sched = algo.initial_schedule(sc.segments[s].delta);
            for (std::size_t j = 1; j <= sc.segments[s].length; ++j, ++k) {
                fill_regressor(data.input, k, x);
                const double y = synth_output(truth, x, data.noise[k]);
                if (probe) probe(a, k, x, y, truth.weights);
                StepResult r;
                try {
                    r = step(std::move(state), std::move(sched), StepInput{x, y}, algo, j);
                } catch (const DivergenceError&) {
                    throw DivergenceError("algorithm '" + algo.name + "', trial " + std::to_string(trial_index),
                                          k + 1);
                }
                state = std::move(r.state);
                sched = std::move(r.schedule);
                trace.sq_deviation.push_back(squared_distance(truth.weights, state.weights));
                trace.p.push_back(r.output.p_used);
                trace.delta.push_back(sched.delta);
            }
        }
    }
    return result;
}

const AlgorithmAggregate& AggregateResult::algorithm(std::string_view name) const {
    for (const auto& a : algorithms) {
        if (a.name == name) return a;
    }
    throw Error("unknown algorithm '" + std::string(name) + "'");
}

double to_db(double msd) noexcept { return 10.0 * std::log10(msd); }

double tail_mean(std::span<const double> curve, std::size_t segment_offset, std::size_t segment_length,
                 std::size_t window) {
    if (window == 0 || window > segment_length) {
        throw Error("steady-state window of " + std::to_string(window) + " does not fit a segment of " +
                    std::to_string(segment_length));
    }
    const std::size_t end = segment_offset + segment_length;
    if (end > curve.size()) throw Error("segment extends past the end of the curve");
    double acc = 0.0;
    for (std::size_t k = end - window; k < end; ++k) acc += curve[k];
    return acc / static_cast<double>(window);
}

double steady_state_msd(const AggregateResult& agg, std::string_view algorithm, std::size_t segment) {
    if (segment >= agg.segment_offsets.size()) throw Error("segment index out of range");
    return tail_mean(agg.algorithm(algorithm).msd, agg.segment_offsets[segment], agg.segment_lengths[segment],
                     agg.steady_state_window);
}

AggregateResult aggregate(const ExperimentConfig& config, std::span<const TrialResult> trials) {
    if (trials.empty()) throw Error("aggregate: no trials");
    const std::size_t total = config.scenario.total_length();
    AggregateResult agg;
    agg.segment_offsets = config.scenario.segment_offsets();
    for (const auto& seg : config.scenario.segments) agg.segment_lengths.push_back(seg.length);
    agg.steady_state_window = config.steady_state_window;
    agg.n_trials = trials.size();

    const double inv_n = 1.0 / static_cast<double>(trials.size());
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        AlgorithmAggregate out;
        out.name = config.algorithms[a].name;
        out.msd.assign(total, 0.0);
        out.mean_p.assign(total, 0.0);
        out.mean_delta.assign(total, 0.0);
        for (const TrialResult& t : trials) {
            const AlgorithmTrace& tr = t.traces.at(a);
            for (std::size_t k = 0; k < total; ++k) {
                out.msd[k] += tr.sq_deviation[k];
                out.mean_p[k] += tr.p[k];
                out.mean_delta[k] += tr.delta[k];
            }
        }
        for (std::size_t k = 0; k < total; ++k) {
            out.msd[k] *= inv_n;
            out.mean_p[k] *= inv_n;
            out.mean_delta[k] *= inv_n;
        }
        for (std::size_t s = 0; s < agg.segment_offsets.size(); ++s) {
            out.steady_state_msd.push_back(
                tail_mean(out.msd, agg.segment_offsets[s], agg.segment_lengths[s], agg.steady_state_window));
        }
        agg.algorithms.push_back(std::move(out));
    }
    return agg;
}

AggregateResult run_experiment(const ExperimentConfig& config, std::size_t n_threads) {
    if (config.n_trials == 0) throw Error("run_experiment: n_trials must be at least 1");
    n_threads = std::clamp<std::size_t>(n_threads, 1, config.n_trials);

    std::vector<TrialResult> trials(config.n_trials);
    std::vector<std::exception_ptr> failures(config.n_trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < config.n_trials; t = next++) {
            try {
                trials[t] = run_trial(config, t);
            } catch (...) {
                failures[t] = std::current_exception();
            }
        }
    };

    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    }

    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    return aggregate(config, trials);
}

}  // namespace vplms
