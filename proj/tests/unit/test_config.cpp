#include <doctest.h>

#include <fstream>

#include "vplms/config.hpp"
#include "vplms/error.hpp"

using namespace vplms;
using nlohmann::json;

namespace {

json minimal() {
    return json::parse(R"({
      "scenario": {"n_taps": 4, "input_variance": 1.0, "noise_variance": 0.01,
                   "segments": [{"nnz": 2, "length": 200, "delta": 0.02}]},
      "algorithms": [
        {"name": "lms", "kind": "lms", "mu": 0.05},
        {"name": "lp", "kind": "lp_lms", "mu": 0.05, "rho": 5e-5, "eps": 0.05, "p": 0.5},
        {"name": "vp", "kind": "vp_lms", "mu": 0.05, "rho": 5e-5, "eps": 0.05, "p0": 1.0, "schedule": "grad_rrd"}
      ],
      "experiment": {"n_trials": 5, "master_seed": 9, "steady_state_window": 50}
    })");
}

std::string rejected_key(const json& doc) {
    try {
        parse_config(doc);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "<accepted>";
}

}  // namespace

TEST_CASE("paper_fig1 preset carries the Table 1 parameters") {
    const auto c = load_preset("paper_fig1");
    REQUIRE(c.algorithms.size() == 3);
    CHECK(c.scenario.n_taps == 16);
    CHECK(c.scenario.input_variance == 1.0);
    CHECK(c.scenario.noise_variance == 0.01);
    REQUIRE(c.scenario.segments.size() == 3);
    const std::size_t nnz[] = {1, 4, 8};
    const double delta[] = {0.02, 0.02, 0.01};
    for (std::size_t s = 0; s < 3; ++s) {
        CHECK(c.scenario.segments[s].nnz == nnz[s]);
        CHECK(c.scenario.segments[s].length == 500);
        CHECK(c.scenario.segments[s].delta == delta[s]);
    }
    for (const auto& a : c.algorithms) CHECK(a.lms.mu == 0.05);
    const auto& lp = c.algorithms[1];
    CHECK(lp.kind == AlgorithmKind::LpLms);
    CHECK(lp.penalty.eps == 0.05);
    CHECK(lp.penalty.rho == 5e-5);
    CHECK(lp.schedule.p == 0.5);
    const auto& vp = c.algorithms[2];
    CHECK(vp.kind == AlgorithmKind::VpLms);
    CHECK(vp.schedule.mode == ScheduleMode::GradRrd);
    CHECK(vp.schedule.p == 1.0);
    CHECK(vp.penalty.eps == 0.05);
    CHECK(vp.penalty.rho == 5e-5);
    CHECK(vp.schedule.window_start == 10);
    CHECK(vp.schedule.window_end == 200);
    CHECK(vp.schedule.u == 0.0);
    CHECK(c.n_trials == 200);
    CHECK(c.steady_state_window == 100);
}

TEST_CASE("paper_fig2_nonsparse preset") {
    const auto c = load_preset("paper_fig2_nonsparse");
    REQUIRE(c.scenario.segments.size() == 1);
    CHECK(c.scenario.segments[0].nnz == 16);
    CHECK(c.scenario.segments[0].delta == 0.005);
    CHECK(c.scenario.noise_variance == 0.001);
    CHECK(c.n_trials == 200);
}

TEST_CASE("unknown preset") { CHECK_THROWS_AS(load_preset("paper_fig9"), Error); }

TEST_CASE("canonical round trip") {
    for (const auto& p : presets()) {
        const auto c = load_preset(p.name);
        CHECK(parse_config(to_json(c)) == c);
        CHECK(to_json(parse_config(to_json(c))) == to_json(c));
    }
    const auto m = parse_config(minimal());
    CHECK(parse_config(to_json(m)) == m);
}

TEST_CASE("defaults for optional schedule keys") {
    const auto c = parse_config(minimal());
    const auto& s = c.algorithms[2].schedule;
    CHECK(s.p_floor == 0.01);
    CHECK(s.u == 0.0);
    CHECK(s.window_start == 10);
    CHECK(s.window_end == 200);
    CHECK(s.stop_threshold == 1e-6);
}

TEST_CASE("validation names the offending key") {
    auto doc = minimal();
    doc["algorithms"][1]["p"] = 1.5;
    CHECK(rejected_key(doc) == "algorithms[1].p");
    try {
        parse_config(doc);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("(0, 1]") != std::string::npos);
    }

    doc = minimal();
    doc["algorithms"][2]["p0"] = 0.0;
    CHECK(rejected_key(doc) == "algorithms[2].p0");

    doc = minimal();
    doc["scenario"]["noise_variance"] = 0.0;
    CHECK(rejected_key(doc) == "scenario.noise_variance");

    doc = minimal();
    doc["scenario"]["input_variance"] = -1.0;
    CHECK(rejected_key(doc) == "scenario.input_variance");

    doc = minimal();
    doc["scenario"]["segments"][0]["nnz"] = 5;
    CHECK(rejected_key(doc) == "scenario.segments[0].nnz");

    doc = minimal();
    doc["algorithms"][0]["mu"] = -0.1;
    CHECK(rejected_key(doc) == "algorithms[0].mu");

    doc = minimal();
    doc["algorithms"][1]["eps"] = 0.0;
    CHECK(rejected_key(doc) == "algorithms[1].eps");

    doc = minimal();
    doc["algorithms"][1]["name"] = "lms";
    CHECK(rejected_key(doc) == "algorithms[1].name");

    doc = minimal();
    doc["algorithms"][2]["schedule"] = "cubic";
    CHECK(rejected_key(doc) == "algorithms[2].schedule");

    doc = minimal();
    doc["algorithms"][2]["window_end"] = 5;
    CHECK(rejected_key(doc) == "algorithms[2].window_end");

    doc = minimal();
    doc["algorithms"][0]["kind"] = "rls";
    CHECK(rejected_key(doc) == "algorithms[0].kind");

    doc = minimal();
    doc["algorithms"][1].erase("rho");
    CHECK(rejected_key(doc) == "algorithms[1].rho");

    doc = minimal();
    doc["algorithms"][0]["rho"] = 1e-4;  // not meaningful for plain LMS
    CHECK(rejected_key(doc) == "algorithms[0].rho");

    doc = minimal();
    doc["experiment"]["steady_state_window"] = 500;
    CHECK(rejected_key(doc) == "experiment.steady_state_window");

    doc = minimal();
    doc["experiment"]["n_trials"] = 0;
    CHECK(rejected_key(doc) == "experiment.n_trials");

    doc = minimal();
    doc["experiment"]["n_trials"] = -3;
    CHECK(rejected_key(doc) == "experiment.n_trials");

    doc = minimal();
    doc["scenario"]["typo"] = 1;
    CHECK(rejected_key(doc) == "scenario.typo");

    doc = minimal();
    doc.erase("experiment");
    CHECK(rejected_key(doc) == "experiment");
}

TEST_CASE("large step size is a warning, not an error") {
    auto doc = minimal();
    doc["algorithms"][0]["mu"] = 1.2;
    const auto c = parse_config(doc);
    const auto warnings = validate(c);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("algorithms[0].mu") != std::string::npos);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_config_text("{ not json"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[]"), ConfigError);
    CHECK_THROWS_AS(parse_config_file("/nonexistent/config.json"), Error);
}

TEST_CASE("load_config prefers files over presets") {
    const auto path = std::filesystem::temp_directory_path() / "vplms_test_config.json";
    {
        std::ofstream out(path);
        out << minimal().dump();
    }
    CHECK(load_config(path.string()).n_trials == 5);
    CHECK(load_config("paper_fig1").n_trials == 200);
    CHECK_THROWS_AS(load_config("no_such_thing"), Error);
    std::filesystem::remove(path);
}
