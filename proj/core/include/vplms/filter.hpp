#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace vplms {

/// Current and previous weight estimates of one adaptive FIR filter.
struct FilterState {
    std::vector<double> weights;
    std::vector<double> prev_weights;
    std::size_t iteration = 0;

    /// Zero-initialized filter with n_taps coefficients.
    static FilterState zeros(std::size_t n_taps);

    std::size_t size() const noexcept { return weights.size(); }
};

struct LmsParams {
    double mu = 0.05;
};

/// Zero-attractor parameters. rho is the already-scaled weight mu * gamma.
struct LpPenaltyParams {
    double rho = 5e-5;
    double eps = 0.05;

    double gamma(const LmsParams& lms) const noexcept { return rho / lms.mu; }
};

struct StepInput {
    std::span<const double> x;
    double y = 0.0;
};

struct StepOutput {
    double error = 0.0;
    double p_used = 1.0;
    std::optional<double> rrd;
};

/// sgn with sgn(0) == 0.
constexpr double sign(double v) noexcept { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

double predict(const FilterState& state, std::span<const double> x);

double compute_error(const FilterState& state, const StepInput& input);

/// w <- w + mu e x.
FilterState lms_step(FilterState state, const StepInput& input, const LmsParams& params);

/// (sum |w_i|^p)^(1/p) for 0 < p <= 1. Throws on p outside that range.
double lp_norm(std::span<const double> w, double p);

/// Per-tap zero-attractor term to subtract from the weights:
///   rho * ||w||_p^(1-p) * sgn(w_i) / (eps + |w_i|^(1-p))
std::vector<double> lp_penalty(std::span<const double> w, double p, const LpPenaltyParams& pen);

struct LpStepResult {
    FilterState state;
    StepOutput output;
};

/// LMS update minus the Lp zero attractor evaluated at the pre-update weights.
LpStepResult lp_lms_step(FilterState state, const StepInput& input, const LmsParams& params,
                         const LpPenaltyParams& pen, double p);

/// Weight norm below which the relative deviation is treated as undefined.
inline constexpr double kRrdNormGuard = 1e-12;

/// ||w_k - w_{k-1}||_2.
double deviation(const FilterState& state);

/// Root relative deviation sqrt(||w_k - w_{k-1}||_2 / ||w_k||_2); empty when ||w_k||_2 < kRrdNormGuard.
std::optional<double> compute_rrd(const FilterState& state);

}  // namespace vplms
