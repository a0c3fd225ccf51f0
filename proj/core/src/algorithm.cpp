#include "vplms/algorithm.hpp"

namespace vplms {

std::string_view to_string(AlgorithmKind kind) noexcept {
    switch (kind) {
        case AlgorithmKind::Lms: return "lms";
        case AlgorithmKind::LpLms: return "lp_lms";
        case AlgorithmKind::VpLms: return "vp_lms";
    }
    return "lms";
}

std::optional<AlgorithmKind> parse_algorithm_kind(std::string_view name) noexcept {
    if (name == "lms") return AlgorithmKind::Lms;
    if (name == "lp_lms") return AlgorithmKind::LpLms;
    if (name == "vp_lms") return AlgorithmKind::VpLms;
    return std::nullopt;
}

PScheduleState AlgorithmConfig::initial_schedule(double segment_delta) const {
    PScheduleState s = schedule;
    s.delta = segment_delta;
    s.rrd_prev.reset();
    s.stopped = false;
    return s;
}

StepResult step(FilterState state, PScheduleState sched, const StepInput& input,
                const AlgorithmConfig& algo, std::size_t segment_iteration) {
    if (!algo.has_penalty()) {
        const StepOutput out{compute_error(state, input), sched.p, std::nullopt};
        state = lms_step(std::move(state), input, algo.lms);
        return {std::move(state), std::move(sched), out};
    }

    auto [next, out] = lp_lms_step(std::move(state), input, algo.lms, algo.penalty, sched.p);
    if (!algo.has_schedule() || !sched.in_window(segment_iteration)) {
        return {std::move(next), std::move(sched), out};
    }

    switch (sched.mode) {
        case ScheduleMode::Fixed:
            break;
        case ScheduleMode::Linear:
            sched = schedule_p_linear(std::move(sched));
            break;
        case ScheduleMode::RrdClamp:
            out.rrd = compute_rrd(next);
            if (out.rrd) sched = schedule_p_rrd_clamp(std::move(sched), *out.rrd, deviation(next));
            break;
        case ScheduleMode::GradRrd:
            out.rrd = compute_rrd(next);
            if (out.rrd) sched = schedule_p_grad(std::move(sched), *out.rrd);
            break;
    }
    sched = schedule_delta(std::move(sched));
    return {std::move(next), std::move(sched), out};
}

}  // namespace vplms
