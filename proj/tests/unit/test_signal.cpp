#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vplms/error.hpp"
#include "vplms/signal.hpp"

using namespace vplms;

namespace {

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

Moments moments(const std::vector<double>& v) {
    Moments m;
    for (double x : v) m.mean += x;
    m.mean /= static_cast<double>(v.size());
    for (double x : v) m.variance += (x - m.mean) * (x - m.mean);
    m.variance /= static_cast<double>(v.size() - 1);
    return m;
}

}  // namespace

TEST_CASE("gen_sparse_system") {
    SUBCASE("fully dense") {
        RngStream rng(1, 0);
        const auto sys = gen_sparse_system(16, 16, rng);
        CHECK(sys.nnz == 16);
        for (double w : sys.weights) CHECK(std::fabs(w) == 1.0);
    }
    SUBCASE("single tap") {
        RngStream rng(1, 1);
        const auto sys = gen_sparse_system(16, 1, rng);
        CHECK(std::count(sys.weights.begin(), sys.weights.end(), 0.0) == 15);
    }
    SUBCASE("deterministic per stream") {
        RngStream a(42, 3), b(42, 3), c(42, 4);
        const auto sa = gen_sparse_system(16, 4, a);
        CHECK(sa.weights == gen_sparse_system(16, 4, b).weights);
        CHECK(sa.weights != gen_sparse_system(16, 4, c).weights);
    }
    SUBCASE("out of range") {
        RngStream rng(1, 0);
        CHECK_THROWS_AS(gen_sparse_system(16, 0, rng), Error);
        CHECK_THROWS_AS(gen_sparse_system(16, 17, rng), Error);
    }
}

TEST_CASE("gen_sparse_system positions and signs are uniform") {
    const std::size_t n = 16, nnz = 4, draws = 4000;
    std::vector<double> hits(n, 0.0);
    double plus = 0.0, total = 0.0;
    for (std::size_t d = 0; d < draws; ++d) {
        RngStream rng(99, d);
        const auto sys = gen_sparse_system(n, nnz, rng);
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (sys.weights[i] != 0.0) {
                ++count;
                hits[i] += 1.0;
                total += 1.0;
                if (sys.weights[i] > 0.0) plus += 1.0;
            }
        }
        REQUIRE(count == nnz);
    }
    const double p = static_cast<double>(nnz) / n;
    const double se = std::sqrt(p * (1.0 - p) / draws);
    for (double h : hits) CHECK(std::fabs(h / draws - p) < 3.0 * se);
    const double se_sign = std::sqrt(0.25 / total);
    CHECK(std::fabs(plus / total - 0.5) < 3.0 * se_sign);
}

TEST_CASE("gen_gaussian moments") {
    RngStream rng(2016, 7);
    const auto unit = moments(gen_gaussian(100000, 1.0, rng));
    CHECK(std::fabs(unit.mean) < 0.02);
    CHECK(unit.variance > 0.97);
    CHECK(unit.variance < 1.03);

    RngStream rng2(2016, 8);
    const auto small = moments(gen_gaussian(100000, 0.01, rng2));
    CHECK(small.variance == doctest::Approx(0.01).epsilon(0.03));

    RngStream a(5, 5), b(5, 5);
    CHECK(gen_gaussian(100, 1.0, a) == gen_gaussian(100, 1.0, b));

    CHECK_THROWS_AS(gen_gaussian(10, 0.0, a), Error);
}

TEST_CASE("make_regressor") {
    const std::vector<double> seven{7, 8, 9};
    CHECK(make_regressor(seven, 0, 4) == std::vector<double>{7, 0, 0, 0});
    const std::vector<double> ramp{1, 2, 3, 4};
    CHECK(make_regressor(ramp, 3, 2) == std::vector<double>{4, 3});
    CHECK(make_regressor(ramp, 2, 1) == std::vector<double>{3});
    CHECK_THROWS_AS(make_regressor(ramp, 4, 2), Error);

    // shifting k by one shifts the window by one
    std::vector<double> in(50);
    std::iota(in.begin(), in.end(), 1.0);
    for (std::size_t k = 0; k + 1 < in.size(); ++k) {
        const auto now = make_regressor(in, k, 16);
        const auto next = make_regressor(in, k + 1, 16);
        CHECK(next[0] == in[k + 1]);
        for (std::size_t i = 1; i < 16; ++i) CHECK(next[i] == now[i - 1]);
    }
}

TEST_CASE("synth_output") {
    CHECK(synth_output({{1, 0}, 1}, std::vector<double>{5, 9}, 0.0) == 5.0);
    CHECK(synth_output({{1, -1}, 2}, std::vector<double>{2, 2}, 0.3) == doctest::Approx(0.3));
    CHECK(synth_output({{0, 0, 0}, 0}, std::vector<double>{2, 2, 1}, -0.7) == -0.7);
    CHECK_THROWS_AS(synth_output({{1, 0}, 1}, std::vector<double>{1}, 0.0), DimensionError);
}

TEST_CASE("SNR identity for a single unit tap") {
    for (double noise_var : {0.01, 0.001}) {
        RngStream srng(3, 0), xrng(3, 1), nrng(3, static_cast<std::uint64_t>(noise_var * 1e6));
        const auto sys = gen_sparse_system(16, 1, srng);
        const std::size_t len = 100000;
        const auto x = gen_gaussian(len, 1.0, xrng);
        const auto n = gen_gaussian(len, noise_var, nrng);
        double signal = 0.0, noise = 0.0;
        std::vector<double> reg(16);
        for (std::size_t k = 0; k < len; ++k) {
            fill_regressor(x, k, reg);
            const double clean = synth_output(sys, reg, 0.0);
            const double noisy = synth_output(sys, reg, n[k]);
            signal += clean * clean;
            noise += (noisy - clean) * (noisy - clean);
        }
        const double snr = signal / noise;
        CHECK(snr == doctest::Approx(1.0 / noise_var).epsilon(0.05));
    }
}

TEST_CASE("scenario offsets") {
    Scenario sc;
    sc.segments = {{1, 500, 0.02}, {4, 300, 0.02}, {8, 200, 0.01}};
    CHECK(sc.total_length() == 1000);
    CHECK(sc.segment_offsets() == std::vector<std::size_t>{0, 500, 800});
}
