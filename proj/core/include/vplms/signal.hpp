#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace vplms {

/// Seeded random stream. Equal (master_seed, stream_id) pairs yield equal sequences.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

/// Ground-truth FIR system with nnz taps equal to +1 or -1.
struct SparseSystem {
    std::vector<double> weights;
    std::size_t nnz = 0;
};

struct ScenarioSegment {
    std::size_t nnz = 1;
    std::size_t length = 500;
    double delta = 0.02;
};

struct Scenario {
    std::size_t n_taps = 16;
    double input_variance = 1.0;
    double noise_variance = 0.01;
    std::vector<ScenarioSegment> segments;

    std::size_t total_length() const noexcept;
    /// Global 0-based index of the first sample of each segment.
    std::vector<std::size_t> segment_offsets() const;
};

SparseSystem gen_sparse_system(std::size_t n_taps, std::size_t nnz, RngStream& rng);

std::vector<double> gen_gaussian(std::size_t length, double variance, RngStream& rng);

/// [input[k], input[k-1], ..., input[k-n_taps+1]] with indices before 0 read as zero.
std::vector<double> make_regressor(std::span<const double> input, std::size_t k, std::size_t n_taps);

/// Allocation-free form of make_regressor writing into out (out.size() taps).
void fill_regressor(std::span<const double> input, std::size_t k, std::span<double> out);

/// w^T x + noise_sample.
double synth_output(const SparseSystem& system, std::span<const double> x, double noise_sample);

}  // namespace vplms
