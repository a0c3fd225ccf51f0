#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "vplms/filter.hpp"
#include "vplms/schedule.hpp"

namespace vplms {

enum class AlgorithmKind { Lms, LpLms, VpLms };

std::string_view to_string(AlgorithmKind kind) noexcept;
std::optional<AlgorithmKind> parse_algorithm_kind(std::string_view name) noexcept;

/// One named filter variant.
///
/// Lms ignores penalty and schedule. LpLms uses schedule.p with the Fixed mode.
/// VpLms runs the scheduler given by schedule.mode; schedule.p is the initial
/// exponent p0 restored at each segment start.
struct AlgorithmConfig {
    std::string name;
    AlgorithmKind kind = AlgorithmKind::Lms;
    LmsParams lms;
    LpPenaltyParams penalty;
    PScheduleState schedule;

    bool has_penalty() const noexcept { return kind != AlgorithmKind::Lms; }
    bool has_schedule() const noexcept {
        return kind == AlgorithmKind::VpLms && schedule.mode != ScheduleMode::Fixed;
    }

    /// Scheduler state at the start of a segment whose delta is segment_delta.
    PScheduleState initial_schedule(double segment_delta) const;
};

struct StepResult {
    FilterState state;
    PScheduleState schedule;
    StepOutput output;
};

/// One full iteration: error, weight update with the current p, then the p and
/// delta schedule updates when segment_iteration lies in the adaptation window.
StepResult step(FilterState state, PScheduleState sched, const StepInput& input,
                const AlgorithmConfig& algo, std::size_t segment_iteration);

}  // namespace vplms
