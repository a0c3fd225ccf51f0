#include "vplms/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vplms/error.hpp"

namespace vplms {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t master_seed, std::uint64_t stream_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed), stream_id_(stream_id), engine_(seeded_engine(master_seed, stream_id)) {}

std::size_t Scenario::total_length() const noexcept {
    std::size_t n = 0;
    for (const auto& seg : segments) n += seg.length;
    return n;
}

std::vector<std::size_t> Scenario::segment_offsets() const {
    std::vector<std::size_t> offsets;
    offsets.reserve(segments.size());
    std::size_t at = 0;
    for (const auto& seg : segments) {
        offsets.push_back(at);
        at += seg.length;
    }
    return offsets;
}

SparseSystem gen_sparse_system(std::size_t n_taps, std::size_t nnz, RngStream& rng) {
    if (nnz < 1 || nnz > n_taps) {
        throw Error("gen_sparse_system: nnz must lie in [1, " + std::to_string(n_taps) + "], got " +
                    std::to_string(nnz));
    }
    auto& eng = rng.engine();
    std::vector<std::size_t> positions(n_taps);
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    // Partial Fisher-Yates: the first nnz slots become a uniform random subset.
    for (std::size_t i = 0; i < nnz; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n_taps - 1);
        std::swap(positions[i], positions[pick(eng)]);
    }
    SparseSystem sys{std::vector<double>(n_taps, 0.0), nnz};
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < nnz; ++i) sys.weights[positions[i]] = coin(eng) ? 1.0 : -1.0;
    return sys;
}

std::vector<double> gen_gaussian(std::size_t length, double variance, RngStream& rng) {
    if (!(variance > 0.0)) throw Error("gen_gaussian: variance must be positive");
    std::normal_distribution<double> dist(0.0, std::sqrt(variance));
    std::vector<double> out(length);
    for (auto& v : out) v = dist(rng.engine());
    return out;
}

void fill_regressor(std::span<const double> input, std::size_t k, std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i <= k ? input[k - i] : 0.0;
}

std::vector<double> make_regressor(std::span<const double> input, std::size_t k, std::size_t n_taps) {
    if (k >= input.size()) throw Error("make_regressor: index out of range");
    std::vector<double> out(n_taps);
    fill_regressor(input, k, out);
    return out;
}

double synth_output(const SparseSystem& system, std::span<const double> x, double noise_sample) {
    if (x.size() != system.weights.size()) {
        throw DimensionError("synth_output", system.weights.size(), x.size());
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += system.weights[i] * x[i];
    return acc + noise_sample;
}

}  // namespace vplms
