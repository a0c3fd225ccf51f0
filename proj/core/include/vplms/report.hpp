#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>

#include "vplms/harness.hpp"

namespace vplms {

inline constexpr const char* kMsdCurvesFile = "msd_curves.csv";
inline constexpr const char* kPTrajectoriesFile = "p_trajectories.csv";
inline constexpr const char* kSummaryFile = "summary.csv";
inline constexpr const char* kManifestFile = "manifest.txt";

std::string version();

void write_msd_curves(std::ostream& out, const ExperimentConfig& config, const AggregateResult& agg);
void write_p_trajectories(std::ostream& out, const ExperimentConfig& config, const AggregateResult& agg);
void write_summary(std::ostream& out, const ExperimentConfig& config, const AggregateResult& agg);

/// Writes msd_curves.csv, p_trajectories.csv and summary.csv into dir
/// (created if missing). Throws Error on any I/O failure.
void write_outputs(const ExperimentConfig& config, const AggregateResult& agg,
                   const std::filesystem::path& dir);

struct RunManifest {
    std::string config_source;
    std::string resolved_config;  // canonical JSON, one line
    std::uint64_t master_seed = 0;
    std::size_t n_trials = 0;
    std::size_t threads = 1;
    std::string version;
    std::filesystem::path output_dir;
    double wall_clock_seconds = 0.0;
};

void write_manifest(const RunManifest& manifest, const std::filesystem::path& dir);

}  // namespace vplms
