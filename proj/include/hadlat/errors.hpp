#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hadlat {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or unsupported matrix/vector dimension.
struct dimension_error : error {
    using error::error;
};

// An operation's stated precondition does not hold for the given input.
struct precondition_error : error {
    using error::error;
};

struct shape_error : error {
    using error::error;
};

struct classification_error : error {
    using error::error;
};

struct numerical_error : error {
    using error::error;
};

// Iterative procedure did not reach its tolerance; carries the last deviations.
struct convergence_error : error {
    convergence_error(const std::string& msg, double modulus_dev, double unitarity_dev)
        : error(msg), modulus_deviation(modulus_dev), unitarity_deviation(unitarity_dev) {}
    double modulus_deviation;
    double unitarity_deviation;
};

// Requested dense computation exceeds the configured dimension cap.
struct resource_error : error {
    resource_error(const std::string& msg, std::size_t required_bytes)
        : error(msg), required_bytes(required_bytes) {}
    std::size_t required_bytes;
};

// Conjugation result is not proportional to a single Pauli string.
// Carries the largest Hilbert-Schmidt coefficients found, as (a-digits, b-digits, |coef|).
struct not_pauli_error : error {
    struct coefficient {
        std::vector<int> a;
        std::vector<int> b;
        double magnitude;
    };
    not_pauli_error(const std::string& msg, std::vector<coefficient> top)
        : error(msg), top_coefficients(std::move(top)) {}
    std::vector<coefficient> top_coefficients;
};

}  // namespace hadlat
