#pragma once

#include <stdexcept>
#include <string>

namespace finsler {

/// Evaluation point outside the chart box / admissible cone, or y = 0.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The fundamental tensor failed its positive-definiteness test at a point.
struct StrongConvexityError : DomainError {
  using DomainError::DomainError;
};

struct SingularMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A derivative of higher order than the jet truncation was requested.
struct OrderExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite-difference step too small relative to the coordinate scale.
struct StepUnderflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A geodesic left the chart before the requested span or stencil was covered.
struct ChartExitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flag with transverse edge nearly parallel to y.
struct DegenerateFlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FitConditioningError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Configuration schema violation; names the offending field.
struct ConfigError : std::runtime_error {
  ConfigError(std::string field_path, const std::string& message)
      : std::runtime_error("config field '" + field_path + "': " + message),
        field(std::move(field_path)) {}
  std::string field;
};

}  // namespace finsler
