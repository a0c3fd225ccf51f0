#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace vplms::cli {

struct RunOptions {
    std::string config;  // file path or preset name
    std::filesystem::path out_dir = "vplms_out";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::size_t threads = 1;
};

/// Loads the config, runs the experiment and writes all output files.
/// Returns the process exit status; diagnostics go to err.
int run_command(const RunOptions& opts, std::ostream& out, std::ostream& err);

int validate_command(const std::string& config, std::ostream& out, std::ostream& err);

int presets_command(const std::optional<std::string>& show, std::ostream& out, std::ostream& err);

/// Full argv entry point used by main().
int main(int argc, char** argv);

}  // namespace vplms::cli
