#include "vplms/error.hpp"

namespace vplms {

DimensionError::DimensionError(const char* what_op, std::size_t expected, std::size_t got)
    : Error(std::string(what_op) + ": dimension mismatch, expected " + std::to_string(expected) +
            " got " + std::to_string(got)) {}

DivergenceError::DivergenceError(std::size_t iteration)
    : DivergenceError("weight update", iteration) {}

DivergenceError::DivergenceError(const std::string& context, std::size_t iteration)
    : Error(context + ": non-finite weights at iteration " + std::to_string(iteration)),
      iteration_(iteration) {}

ConfigError::ConfigError(std::string key, const std::string& message)
    : Error(key + ": " + message), key_(std::move(key)) {}

}  // namespace vplms
