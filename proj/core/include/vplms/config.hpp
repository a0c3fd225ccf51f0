#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vplms/harness.hpp"

namespace vplms {

/// Parses and validates an experiment description. Throws ConfigError naming
/// the offending key.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig parse_config_text(std::string_view text);
ExperimentConfig parse_config_file(const std::filesystem::path& path);

/// Checks every invariant of a programmatically built config. Returns
/// non-fatal warnings; throws ConfigError on violations.
std::vector<std::string> validate(const ExperimentConfig& config);

/// Canonical JSON form; parse_config(to_json(c)) reproduces c.
nlohmann::json to_json(const ExperimentConfig& config);

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

struct Preset {
    std::string_view name;
    std::string_view description;
    std::string_view json;
};

std::span<const Preset> presets();

/// Throws Error for an unknown name.
ExperimentConfig load_preset(std::string_view name);

/// A file path if one exists, otherwise a bundled preset name.
ExperimentConfig load_config(const std::string& path_or_preset);

}  // namespace vplms
