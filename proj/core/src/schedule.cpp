#include "vplms/schedule.hpp"

#include <algorithm>

namespace vplms {

std::string_view to_string(ScheduleMode mode) noexcept {
    switch (mode) {
        case ScheduleMode::Fixed: return "fixed";
        case ScheduleMode::Linear: return "linear";
        case ScheduleMode::RrdClamp: return "rrd_clamp";
        case ScheduleMode::GradRrd: return "grad_rrd";
    }
    return "fixed";
}

std::optional<ScheduleMode> parse_schedule_mode(std::string_view name) noexcept {
    if (name == "fixed") return ScheduleMode::Fixed;
    if (name == "linear") return ScheduleMode::Linear;
    if (name == "rrd_clamp") return ScheduleMode::RrdClamp;
    if (name == "grad_rrd") return ScheduleMode::GradRrd;
    return std::nullopt;
}

namespace {

double clamp_p(double p, double floor) { return std::clamp(p, floor, 1.0); }

}  // namespace

PScheduleState schedule_p_linear(PScheduleState sched) {
    sched.p = clamp_p(std::max(sched.p - sched.s, 0.0), sched.p_floor);
    return sched;
}

PScheduleState schedule_p_rrd_clamp(PScheduleState sched, double rrd, double deviation) {
    if (sched.stopped) return sched;
    if (deviation < sched.stop_threshold) {
        sched.stopped = true;
        return sched;
    }
    sched.p = clamp_p(std::min(rrd, 1.0), sched.p_floor);
    return sched;
}

PScheduleState schedule_p_grad(PScheduleState sched, double rrd) {
    if (sched.rrd_prev && rrd >= kGradRrdGuard) {
        const double gradient = rrd - *sched.rrd_prev;
        sched.p = clamp_p(sched.p + sched.delta * gradient / rrd, sched.p_floor);
    }
    sched.rrd_prev = rrd;
    return sched;
}

PScheduleState schedule_delta(PScheduleState sched) {
    sched.delta = std::max(sched.delta - sched.u, 0.0);
    return sched;
}

}  // namespace vplms
