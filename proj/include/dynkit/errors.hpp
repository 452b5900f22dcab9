#pragma once

#include <stdexcept>
#include <string>

namespace dynkit {

/// Configuration / input-document problem (CLI exit code 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure inside an integrator or update rule (CLI exit code 3).
struct IntegrationError : std::runtime_error {
    explicit IntegrationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Degenerate input: zero variance, vanishing denominator, all-equal data (CLI exit code 3).
struct DegenerateError : std::runtime_error {
    explicit DegenerateError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem problem while emitting outputs (CLI exit code 4).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dynkit
