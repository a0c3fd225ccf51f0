#include "cli.hpp"

#include <chrono>

#include <CLI11.hpp>

#include "vplms/config.hpp"
#include "vplms/error.hpp"
#include "vplms/report.hpp"

namespace vplms::cli {

int run_command(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        ExperimentConfig config = load_config(opts.config);
        if (opts.seed) config.master_seed = *opts.seed;
        if (opts.trials) config.n_trials = *opts.trials;
        for (const auto& w : validate(config)) err << "warning: " << w << '\n';

        const auto started = std::chrono::steady_clock::now();
        const AggregateResult agg = run_experiment(config, opts.threads);
        write_outputs(config, agg, opts.out_dir);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;

        RunManifest manifest;
        manifest.config_source = opts.config;
        manifest.resolved_config = to_json(config).dump();
        manifest.master_seed = config.master_seed;
        manifest.n_trials = config.n_trials;
        manifest.threads = opts.threads;
        manifest.version = version();
        manifest.output_dir = opts.out_dir;
        manifest.wall_clock_seconds = elapsed.count();
        write_manifest(manifest, opts.out_dir);

        out << "wrote " << (opts.out_dir / kMsdCurvesFile).string() << ", " << kPTrajectoriesFile << ", "
            << kSummaryFile << ", " << kManifestFile << " (" << config.n_trials << " trials, "
            << elapsed.count() << " s)\n";
        for (const auto& a : agg.algorithms) {
            out << "  " << a.name << ':';
            for (double msd : a.steady_state_msd) out << ' ' << to_db(msd) << " dB";
            out << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int validate_command(const std::string& config, std::ostream& out, std::ostream& err) {
    try {
        const ExperimentConfig c = load_config(config);
        for (const auto& w : validate(c)) err << "warning: " << w << '\n';
        out << config << ": ok (" << c.algorithms.size() << " algorithms, " << c.scenario.segments.size()
            << " segments, " << c.scenario.total_length() << " iterations, " << c.n_trials << " trials)\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int presets_command(const std::optional<std::string>& show, std::ostream& out, std::ostream& err) {
    if (show) {
        try {
            out << to_json(load_preset(*show)).dump(2) << '\n';
            return 0;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
    }
    for (const auto& p : presets()) out << p.name << "\t" << p.description << '\n';
    return 0;
}

int main(int argc, char** argv) {
    CLI::App app{"Variable-p Lp-norm constrained LMS experiments"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    RunOptions run_opts;
    auto* run = app.add_subcommand("run", "Run an experiment and write learning curves");
    run->add_option("config", run_opts.config, "Config file or preset name")->required();
    run->add_option("--out", run_opts.out_dir, "Output directory")->capture_default_str();
    run->add_option("--seed", run_opts.seed, "Override the master seed");
    run->add_option("--trials", run_opts.trials, "Override the number of trials")->check(CLI::PositiveNumber);
    run->add_option("--threads", run_opts.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    std::string validate_path;
    auto* val = app.add_subcommand("validate", "Parse and check a config without running it");
    val->add_option("config", validate_path, "Config file or preset name")->required();

    std::optional<std::string> show;
    auto* pre = app.add_subcommand("presets", "List bundled configs");
    pre->add_option("--show", show, "Print the canonical JSON of one preset");

    CLI11_PARSE(app, argc, argv);

    if (*run) return run_command(run_opts, std::cout, std::cerr);
    if (*val) return validate_command(validate_path, std::cout, std::cerr);
    return presets_command(show, std::cout, std::cerr);
}

}  // namespace vplms::cli
