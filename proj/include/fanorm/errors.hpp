#pragma once

#include <stdexcept>
#include <string>

namespace fanorm {

/// Raised when inputs violate a documented precondition or invariant
/// (bad group tables, non-normal kernels, malformed specs, size caps).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a numeric routine cannot meet its tolerance contract
/// (SVD residual too large, quadrature not converged within the point cap).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fanorm
