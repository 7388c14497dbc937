#pragma once

#include <stdexcept>
#include <string>

namespace vacfield {

/// Invalid run configuration. Carries the 1-based line of the offending key
/// when the error came from a config document (0 otherwise).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& message, std::string key = {}, int line = 0)
        : std::runtime_error(message), key_(std::move(key)), line_(line) {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    std::string key_;
    int line_;
};

/// Argument outside the physical domain of a quantity (e.g. z < 0 inside the conductor).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Quadrature or extrapolation did not reach the requested accuracy.
class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(const std::string& message, double best_estimate, double error_estimate)
        : std::runtime_error(message), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace vacfield
