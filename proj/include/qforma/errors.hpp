#pragma once

#include <stdexcept>
#include <string>

namespace qforma {

/// Thrown when a requested computation exceeds a configured resource cap.
/// The caller is expected to refuse loudly rather than degrade.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an input violates a documented mathematical hypothesis
/// (as opposed to a malformed argument, which raises std::invalid_argument).
struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an integer cannot be factored within the configured
/// trial-division bound and deterministic primality window.
struct factor_bound_exceeded : std::runtime_error {
    explicit factor_bound_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qforma
