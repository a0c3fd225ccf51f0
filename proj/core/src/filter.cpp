#include "vplms/filter.hpp"

#include <cmath>

#include "vplms/error.hpp"

namespace vplms {

namespace {

void check_size(const char* op, const FilterState& state, std::span<const double> x) {
    if (x.size() != state.size()) throw DimensionError(op, state.size(), x.size());
}

void check_finite(const FilterState& state) {
    for (double w : state.weights) {
        if (!std::isfinite(w)) throw DivergenceError(state.iteration);
    }
}

double l2_norm(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

}  // namespace

FilterState FilterState::zeros(std::size_t n_taps) {
    if (n_taps == 0) throw Error("FilterState: need at least one tap");
    return FilterState{std::vector<double>(n_taps, 0.0), std::vector<double>(n_taps, 0.0), 0};
}

double predict(const FilterState& state, std::span<const double> x) {
    check_size("predict", state, x);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += state.weights[i] * x[i];
    return acc;
}

double compute_error(const FilterState& state, const StepInput& input) {
    return input.y - predict(state, input.x);
}

FilterState lms_step(FilterState state, const StepInput& input, const LmsParams& params) {
    const double e = compute_error(state, input);
    state.prev_weights = state.weights;
    const double g = params.mu * e;
    for (std::size_t i = 0; i < state.weights.size(); ++i) state.weights[i] += g * input.x[i];
    ++state.iteration;
    check_finite(state);
    return state;
}

double lp_norm(std::span<const double> w, double p) {
    if (!(p > 0.0 && p <= 1.0)) throw Error("lp_norm: p must lie in (0, 1], got " + std::to_string(p));
    double acc = 0.0;
    for (double v : w) {
        if (v != 0.0) acc += std::pow(std::abs(v), p);
    }
    if (acc == 0.0) return 0.0;
    return std::pow(acc, 1.0 / p);
}

std::vector<double> lp_penalty(std::span<const double> w, double p, const LpPenaltyParams& pen) {
    std::vector<double> out(w.size(), 0.0);
    const double norm = lp_norm(w, p);
    if (norm == 0.0) return out;
    const double scale = pen.rho * std::pow(norm, 1.0 - p);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0.0) continue;
        out[i] = scale * sign(w[i]) / (pen.eps + std::pow(std::abs(w[i]), 1.0 - p));
    }
    return out;
}

LpStepResult lp_lms_step(FilterState state, const StepInput& input, const LmsParams& params,
                         const LpPenaltyParams& pen, double p) {
    const double e = compute_error(state, input);
    const std::vector<double> attractor = lp_penalty(state.weights, p, pen);
    state.prev_weights = state.weights;
    const double g = params.mu * e;
    for (std::size_t i = 0; i < state.weights.size(); ++i) {
        state.weights[i] += g * input.x[i];
        state.weights[i] -= attractor[i];
    }
    ++state.iteration;
    check_finite(state);
    return {std::move(state), StepOutput{e, p, std::nullopt}};
}

double deviation(const FilterState& state) {
    double acc = 0.0;
    for (std::size_t i = 0; i < state.weights.size(); ++i) {
        const double d = state.weights[i] - state.prev_weights[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

std::optional<double> compute_rrd(const FilterState& state) {
    const double norm = l2_norm(state.weights);
    if (norm < kRrdNormGuard) return std::nullopt;
    return std::sqrt(deviation(state) / norm);
}

}  // namespace vplms
