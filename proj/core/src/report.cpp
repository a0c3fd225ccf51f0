#include "vplms/report.hpp"

#include <fstream>
#include <iomanip>
#include <limits>

#include "vplms/error.hpp"

namespace vplms {

namespace {

void set_precision(std::ostream& out) {
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

}  // namespace

std::string version() { return VPLMS_VERSION; }

void write_msd_curves(std::ostream& out, const ExperimentConfig& config, const AggregateResult& agg) {
    set_precision(out);
    out << "iteration";
    for (const auto& a : agg.algorithms) out << ',' << a.name << "_msd," << a.name << "_msd_db";
    out << '\n';
    const std::size_t total = config.scenario.total_length();
    for (std::size_t k = 0; k < total; ++k) {
        out << k + 1;
        for (const auto& a : agg.algorithms) out << ',' << a.msd[k] << ',' << to_db(a.msd[k]);
        out << '\n';
    }
}

void write_p_trajectories(std::ostream& out, const ExperimentConfig& config, const AggregateResult& agg) {
    set_precision(out);
    std::vector<std::size_t> scheduled;
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        if (config.algorithms[a].has_schedule()) scheduled.push_back(a);
    }
    out << "iteration";
    for (std::size_t a : scheduled) out << ',' << agg.algorithms[a].name << "_p," << agg.algorithms[a].name << "_delta";
    out << '\n';
    const std::size_t total = config.scenario.total_length();
    for (std::size_t k = 0; k < total; ++k) {
        out << k + 1;
        for (std::size_t a : scheduled) out << ',' << agg.algorithms[a].mean_p[k] << ',' << agg.algorithms[a].mean_delta[k];
        out << '\n';
    }
}

void write_summary(std::ostream& out, const ExperimentConfig& config, const AggregateResult& agg) {
    set_precision(out);
    out << "algorithm,segment,nnz,first_iteration,last_iteration,window,steady_state_msd,steady_state_msd_db\n";
    for (const auto& a : agg.algorithms) {
        for (std::size_t s = 0; s < agg.segment_offsets.size(); ++s) {
            const std::size_t last = agg.segment_offsets[s] + agg.segment_lengths[s];
            out << a.name << ',' << s << ',' << config.scenario.segments[s].nnz << ','
                << agg.segment_offsets[s] + 1 << ',' << last << ',' << agg.steady_state_window << ','
                << a.steady_state_msd[s] << ',' << to_db(a.steady_state_msd[s]) << '\n';
        }
    }
}

void write_outputs(const ExperimentConfig& config, const AggregateResult& agg, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory '" + dir.string() + "': " + ec.message());

    const auto emit = [&](const char* file, auto&& writer) {
        const auto path = dir / file;
        auto out = open_output(path);
        writer(out, config, agg);
        finish(out, path);
    };
    emit(kMsdCurvesFile, write_msd_curves);
    emit(kPTrajectoriesFile, write_p_trajectories);
    emit(kSummaryFile, write_summary);
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& dir) {
    const auto path = dir / kManifestFile;
    auto out = open_output(path);
    out << "config=" << manifest.config_source << '\n'
        << "resolved_config=" << manifest.resolved_config << '\n'
        << "master_seed=" << manifest.master_seed << '\n'
        << "n_trials=" << manifest.n_trials << '\n'
        << "threads=" << manifest.threads << '\n'
        << "version=" << manifest.version << '\n'
        << "output_dir=" << manifest.output_dir.string() << '\n'
        << "wall_clock_seconds=" << std::fixed << std::setprecision(3) << manifest.wall_clock_seconds << '\n';
    finish(out, path);
}

}  // namespace vplms
