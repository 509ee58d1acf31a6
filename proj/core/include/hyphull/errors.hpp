#pragma once

#include <stdexcept>
#include <string>

namespace hyphull {

/// Input lies outside the mathematical domain of an operation
/// (e.g. a disk point on or beyond the unit circle).
struct OutOfDomain : std::domain_error {
    using std::domain_error::domain_error;
};

/// Simulation or estimator configuration is unusable (nonpositive dt, ...).
struct InvalidConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A path operation received zero points.
struct EmptyPath : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature exhausted its panel budget before reaching the
/// requested absolute tolerance, or a cross-method audit failed.
struct ToleranceNotMet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hyphull
