#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "finsler/metric.hpp"
#include "finsler/types.hpp"

namespace finsler {

struct SamplerParams {
  std::uint64_t seed = 42;
  int count = 40;
  double scale = 1.0;  // shrink factor on the default sampling domain
};

/// Deterministic admissible points; y is normalized to unit F. Throws
/// DomainError when the rejection budget produces no admissible points.
std::vector<TangentPoint> sample_points(const MetricInstance& m, const SamplerParams& sp);

/// A transverse edge for flag evaluation at p (not parallel to y).
Vec sample_edge(const MetricInstance& m, const TangentPoint& p, std::mt19937_64& rng);

}  // namespace finsler
