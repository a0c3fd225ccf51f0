#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vplms {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vector lengths that must agree do not.
class DimensionError : public Error {
public:
    DimensionError(const char* what_op, std::size_t expected, std::size_t got);
};

/// A weight update produced NaN or Inf.
class DivergenceError : public Error {
public:
    explicit DivergenceError(std::size_t iteration);
    DivergenceError(const std::string& context, std::size_t iteration);

    std::size_t iteration() const noexcept { return iteration_; }

private:
    std::size_t iteration_;
};

/// Invalid configuration value; key() is the dotted path of the offending field.
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& message);

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

}  // namespace vplms
