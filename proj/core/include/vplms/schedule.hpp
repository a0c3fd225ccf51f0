#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace vplms {

enum class ScheduleMode { Fixed, Linear, RrdClamp, GradRrd };

std::string_view to_string(ScheduleMode mode) noexcept;
std::optional<ScheduleMode> parse_schedule_mode(std::string_view name) noexcept;

/// Exponent p and step delta of the variable-p schedulers, plus their bookkeeping.
///
/// window_start / window_end are 1-based iteration indices inside the current
/// scenario segment; schedule updates are evaluated only for iterations in
/// [window_start, window_end] and take effect on the following iteration.
struct PScheduleState {
    ScheduleMode mode = ScheduleMode::Fixed;
    double p = 1.0;
    double p_floor = 0.01;
    double s = 0.01;
    double delta = 0.02;
    double u = 0.0;
    std::optional<double> rrd_prev;
    std::size_t window_start = 10;
    std::size_t window_end = 200;
    double stop_threshold = 1e-6;
    bool stopped = false;

    bool in_window(std::size_t segment_iteration) const noexcept {
        return segment_iteration >= window_start && segment_iteration <= window_end;
    }
};

/// Division guard for the gradient schedule: rRD below this skips the p update.
inline constexpr double kGradRrdGuard = 1e-8;

/// p <- max(p - s, 0), raised to p_floor.
PScheduleState schedule_p_linear(PScheduleState sched);

/// p <- clamp(rrd, p_floor, 1), unless deviation < stop_threshold which freezes p for good.
PScheduleState schedule_p_rrd_clamp(PScheduleState sched, double rrd, double deviation);

/// p <- clamp(p + delta * (rrd - rrd_prev) / rrd, p_floor, 1); always records rrd as rrd_prev.
/// The first call (no rrd_prev yet) and calls with rrd < kGradRrdGuard leave p unchanged.
PScheduleState schedule_p_grad(PScheduleState sched, double rrd);

/// delta <- max(delta - u, 0).
PScheduleState schedule_delta(PScheduleState sched);

}  // namespace vplms
