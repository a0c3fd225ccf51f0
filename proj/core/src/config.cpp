#include "vplms/config.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "vplms/error.hpp"

namespace vplms {

using nlohmann::json;

namespace {

constexpr std::string_view kPaperFig1 = R"({
  "scenario": {
    "n_taps": 16,
    "input_variance": 1.0,
    "noise_variance": 0.01,
    "segments": [
      {"nnz": 1, "length": 500, "delta": 0.02},
      {"nnz": 4, "length": 500, "delta": 0.02},
      {"nnz": 8, "length": 500, "delta": 0.01}
    ]
  },
  "algorithms": [
    {"name": "lms", "kind": "lms", "mu": 0.05},
    {"name": "lp_lms", "kind": "lp_lms", "mu": 0.05, "rho": 5e-5, "eps": 0.05, "p": 0.5},
    {"name": "vp_lms", "kind": "vp_lms", "mu": 0.05, "rho": 5e-5, "eps": 0.05, "p0": 1.0,
     "schedule": "grad_rrd", "window_start": 10, "window_end": 200}
  ],
  "experiment": {"n_trials": 200, "master_seed": 2016, "steady_state_window": 100}
})";

constexpr std::string_view kPaperFig2 = R"({
  "scenario": {
    "n_taps": 16,
    "input_variance": 1.0,
    "noise_variance": 0.001,
    "segments": [
      {"nnz": 16, "length": 500, "delta": 0.005}
    ]
  },
  "algorithms": [
    {"name": "lms", "kind": "lms", "mu": 0.05},
    {"name": "lp_lms", "kind": "lp_lms", "mu": 0.05, "rho": 5e-5, "eps": 0.05, "p": 0.5},
    {"name": "vp_lms", "kind": "vp_lms", "mu": 0.05, "rho": 5e-5, "eps": 0.05, "p0": 1.0,
     "schedule": "grad_rrd", "window_start": 10, "window_end": 200}
  ],
  "experiment": {"n_trials": 200, "master_seed": 2016, "steady_state_window": 100}
})";

constexpr std::array kPresets{
    Preset{"paper_fig1", "SR 1/16, 4/16, 8/16 x 500 samples, SNR 20 dB: LMS vs Lp-LMS vs gradient-of-rRD vp-LMS",
           kPaperFig1},
    Preset{"paper_fig2_nonsparse", "SR 16/16 x 500 samples, SNR 30 dB: the non-sparse case", kPaperFig2},
};

std::string join(const std::string& base, std::string_view key) {
    return base.empty() ? std::string(key) : base + "." + std::string(key);
}

std::string index_key(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

/// Typed accessor that remembers which keys were read, so leftovers can be rejected.
class Section {
public:
    Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
    }

    const json& child(std::string_view key) {
        seen_.insert(std::string(key));
        auto it = node_.find(std::string(key));
        if (it == node_.end()) throw ConfigError(join(path_, key), "missing required key");
        return *it;
    }

    bool has(std::string_view key) const { return node_.contains(std::string(key)); }

    double number(std::string_view key) {
        const json& v = child(key);
        if (!v.is_number()) throw ConfigError(join(path_, key), "expected a number");
        return v.get<double>();
    }

    double number_or(std::string_view key, double fallback) { return has(key) ? number(key) : fallback; }

    std::uint64_t unsigned_int(std::string_view key) {
        const json& v = child(key);
        if (v.is_number_unsigned()) return v.get<std::uint64_t>();
        if (v.is_number_integer()) {
            throw ConfigError(join(path_, key), "must be non-negative");
        }
        throw ConfigError(join(path_, key), "expected an integer");
    }

    std::uint64_t unsigned_or(std::string_view key, std::uint64_t fallback) {
        return has(key) ? unsigned_int(key) : fallback;
    }

    std::string string(std::string_view key) {
        const json& v = child(key);
        if (!v.is_string()) throw ConfigError(join(path_, key), "expected a string");
        return v.get<std::string>();
    }

    std::string key(std::string_view k) const { return join(path_, k); }

    void reject_unknown() const {
        for (const auto& [k, _] : node_.items()) {
            if (!seen_.contains(k)) throw ConfigError(join(path_, k), "unknown key");
        }
    }

private:
    const json& node_;
    std::string path_;
    std::set<std::string, std::less<>> seen_;
};

void require(bool ok, const std::string& key, const std::string& message) {
    if (!ok) throw ConfigError(key, message);
}

Scenario parse_scenario(const json& node) {
    Section sec(node, "scenario");
    Scenario sc;
    sc.n_taps = sec.unsigned_int("n_taps");
    sc.input_variance = sec.number("input_variance");
    sc.noise_variance = sec.number("noise_variance");
    const json& segs = sec.child("segments");
    require(segs.is_array(), "scenario.segments", "expected an array");
    for (std::size_t i = 0; i < segs.size(); ++i) {
        Section seg(segs[i], index_key("scenario.segments", i));
        ScenarioSegment s;
        s.nnz = seg.unsigned_int("nnz");
        s.length = seg.unsigned_int("length");
        s.delta = seg.number_or("delta", 0.0);
        seg.reject_unknown();
        sc.segments.push_back(s);
    }
    sec.reject_unknown();
    return sc;
}

AlgorithmConfig parse_algorithm(const json& node, const std::string& path) {
    Section sec(node, path);
    AlgorithmConfig a;
    a.name = sec.string("name");
    const std::string kind = sec.string("kind");
    const auto parsed_kind = parse_algorithm_kind(kind);
    require(parsed_kind.has_value(), sec.key("kind"), "must be one of lms, lp_lms, vp_lms (got '" + kind + "')");
    a.kind = *parsed_kind;
    a.lms.mu = sec.number("mu");

    if (a.kind == AlgorithmKind::Lms) {
        sec.reject_unknown();
        return a;
    }

    a.penalty.rho = sec.number("rho");
    a.penalty.eps = sec.number("eps");
    PScheduleState& sched = a.schedule;
    if (a.kind == AlgorithmKind::LpLms) {
        sched.mode = ScheduleMode::Fixed;
        sched.p = sec.number("p");
        sec.reject_unknown();
        return a;
    }

    const std::string mode = sec.has("schedule") ? sec.string("schedule") : std::string("grad_rrd");
    const auto parsed_mode = parse_schedule_mode(mode);
    require(parsed_mode.has_value(), sec.key("schedule"),
            "must be one of fixed, linear, rrd_clamp, grad_rrd (got '" + mode + "')");
    sched.mode = *parsed_mode;
    if (sec.has("p0")) {
        require(!sec.has("p"), sec.key("p"), "give either p or p0, not both");
        sched.p = sec.number("p0");
    } else {
        sched.p = sec.number_or("p", 1.0);
    }
    sched.p_floor = sec.number_or("p_floor", sched.p_floor);
    sched.s = sec.number_or("s", sched.s);
    sched.u = sec.number_or("u", sched.u);
    sched.window_start = sec.unsigned_or("window_start", sched.window_start);
    sched.window_end = sec.unsigned_or("window_end", sched.window_end);
    sched.stop_threshold = sec.number_or("stop_threshold", sched.stop_threshold);
    sec.reject_unknown();
    return a;
}

std::string algo_key(std::size_t i, std::string_view field) {
    return index_key("algorithms", i) + "." + std::string(field);
}

}  // namespace

std::vector<std::string> validate(const ExperimentConfig& config) {
    std::vector<std::string> warnings;
    const Scenario& sc = config.scenario;
    require(sc.n_taps >= 1, "scenario.n_taps", "must be at least 1");
    require(sc.input_variance > 0.0, "scenario.input_variance", "variance must be > 0");
    require(sc.noise_variance > 0.0, "scenario.noise_variance", "variance must be > 0");
    require(!sc.segments.empty(), "scenario.segments", "need at least one segment");
    for (std::size_t i = 0; i < sc.segments.size(); ++i) {
        const auto& seg = sc.segments[i];
        const std::string base = index_key("scenario.segments", i);
        require(seg.nnz >= 1 && seg.nnz <= sc.n_taps, base + ".nnz",
                "must lie in [1, n_taps=" + std::to_string(sc.n_taps) + "]");
        require(seg.length >= 1, base + ".length", "must be at least 1");
        require(seg.delta >= 0.0, base + ".delta", "must be >= 0");
        require(config.steady_state_window <= seg.length, "experiment.steady_state_window",
                "exceeds the length of " + base);
    }

    require(!config.algorithms.empty(), "algorithms", "need at least one algorithm");
    std::set<std::string, std::less<>> names;
    for (std::size_t i = 0; i < config.algorithms.size(); ++i) {
        const AlgorithmConfig& a = config.algorithms[i];
        require(!a.name.empty(), algo_key(i, "name"), "must not be empty");
        require(names.insert(a.name).second, algo_key(i, "name"), "duplicate algorithm name '" + a.name + "'");
        require(a.lms.mu > 0.0, algo_key(i, "mu"), "step size must be > 0");
        if (a.lms.mu * sc.input_variance >= 1.0) {
            warnings.push_back(algo_key(i, "mu") +
                               ": step size times input variance is >= 1; LMS is likely to diverge");
        }
        if (!a.has_penalty()) continue;
        require(a.penalty.rho >= 0.0, algo_key(i, "rho"), "must be >= 0");
        require(a.penalty.eps > 0.0, algo_key(i, "eps"), "must be > 0");
        const auto& s = a.schedule;
        const char* p_key = a.kind == AlgorithmKind::LpLms ? "p" : "p0";
        require(s.p > 0.0 && s.p <= 1.0, algo_key(i, p_key), "p must lie in (0, 1]");
        if (a.kind == AlgorithmKind::LpLms) continue;
        require(s.p_floor > 0.0 && s.p_floor <= 1.0, algo_key(i, "p_floor"), "must lie in (0, 1]");
        require(s.p >= s.p_floor, algo_key(i, p_key), "must be >= p_floor");
        require(s.mode != ScheduleMode::Linear || s.s > 0.0, algo_key(i, "s"), "linear decrement must be > 0");
        require(s.u >= 0.0, algo_key(i, "u"), "must be >= 0");
        require(s.window_start >= 1, algo_key(i, "window_start"), "iterations are 1-based; must be >= 1");
        require(s.window_end >= s.window_start, algo_key(i, "window_end"), "must be >= window_start");
        require(s.stop_threshold >= 0.0, algo_key(i, "stop_threshold"), "must be >= 0");
    }

    require(config.n_trials >= 1, "experiment.n_trials", "must be at least 1");
    require(config.steady_state_window >= 1, "experiment.steady_state_window", "must be at least 1");
    return warnings;
}

ExperimentConfig parse_config(const json& doc) {
    Section root(doc, "");
    ExperimentConfig config;
    config.scenario = parse_scenario(root.child("scenario"));

    const json& algos = root.child("algorithms");
    require(algos.is_array(), "algorithms", "expected an array");
    for (std::size_t i = 0; i < algos.size(); ++i) {
        config.algorithms.push_back(parse_algorithm(algos[i], index_key("algorithms", i)));
    }

    Section exp(root.child("experiment"), "experiment");
    config.n_trials = exp.unsigned_or("n_trials", config.n_trials);
    config.master_seed = exp.unsigned_or("master_seed", config.master_seed);
    config.steady_state_window = exp.unsigned_or("steady_state_window", config.steady_state_window);
    exp.reject_unknown();
    root.reject_unknown();

    validate(config);
    return config;
}

ExperimentConfig parse_config_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", std::string("not valid JSON: ") + e.what());
    }
    return parse_config(doc);
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

json to_json(const ExperimentConfig& config) {
    json segs = json::array();
    for (const auto& s : config.scenario.segments) {
        segs.push_back({{"nnz", s.nnz}, {"length", s.length}, {"delta", s.delta}});
    }
    json algos = json::array();
    for (const auto& a : config.algorithms) {
        json j{{"name", a.name}, {"kind", std::string(to_string(a.kind))}, {"mu", a.lms.mu}};
        if (a.kind != AlgorithmKind::Lms) {
            j["rho"] = a.penalty.rho;
            j["eps"] = a.penalty.eps;
        }
        if (a.kind == AlgorithmKind::LpLms) j["p"] = a.schedule.p;
        if (a.kind == AlgorithmKind::VpLms) {
            const auto& s = a.schedule;
            j["p0"] = s.p;
            j["schedule"] = std::string(to_string(s.mode));
            j["p_floor"] = s.p_floor;
            j["s"] = s.s;
            j["u"] = s.u;
            j["window_start"] = s.window_start;
            j["window_end"] = s.window_end;
            j["stop_threshold"] = s.stop_threshold;
        }
        algos.push_back(std::move(j));
    }
    return json{
        {"scenario",
         {{"n_taps", config.scenario.n_taps},
          {"input_variance", config.scenario.input_variance},
          {"noise_variance", config.scenario.noise_variance},
          {"segments", std::move(segs)}}},
        {"algorithms", std::move(algos)},
        {"experiment",
         {{"n_trials", config.n_trials},
          {"master_seed", config.master_seed},
          {"steady_state_window", config.steady_state_window}}},
    };
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) { return to_json(a) == to_json(b); }

std::span<const Preset> presets() { return kPresets; }

ExperimentConfig load_preset(std::string_view name) {
    for (const auto& p : kPresets) {
        if (p.name == name) return parse_config_text(p.json);
    }
    throw Error("unknown preset '" + std::string(name) + "'");
}

ExperimentConfig load_config(const std::string& path_or_preset) {
    if (std::filesystem::exists(path_or_preset)) return parse_config_file(path_or_preset);
    for (const auto& p : kPresets) {
        if (p.name == path_or_preset) return parse_config_text(p.json);
    }
    throw Error("'" + path_or_preset + "' is neither a readable file nor a bundled preset");
}

}  // namespace vplms
