#pragma once

#include "finsler/geometry.hpp"
#include "finsler/metric.hpp"
#include "finsler/tensor.hpp"
#include "finsler/types.hpp"

namespace finsler {

double eval_F(const MetricInstance& m, const TangentPoint& p);

/// g_ij, symmetric positive-definite, 0-homogeneous.
TensorBlock fundamental_tensor(const MetricInstance& m, const TangentPoint& p);

TensorBlock inverse_metric(const MetricInstance& m, const TangentPoint& p);

/// Cartan tensor A_ijk = (F/2) dg_ij/dy^k, totally symmetric, 0-homogeneous,
/// annihilated by contraction with y.
TensorBlock cartan_tensor(const MetricInstance& m, const TangentPoint& p);

/// Raw evaluation without the symmetrizing store; for symmetry diagnostics.
Tensor<double> cartan_tensor_raw(const MetricInstance& m, const TangentPoint& p);

/// C^i_jk = g^{im} A_mjk / F, (-1)-homogeneous.
TensorBlock normalized_cartan(const MetricInstance& m, const TangentPoint& p);

struct UnitEll {
  Vec up;    // ell^i = y^i / F
  Vec down;  // ell_i = g_ij ell^j
};
UnitEll unit_ell(const MetricInstance& m, const TangentPoint& p);

double metric_condition(const MetricInstance& m, const TangentPoint& p);

}  // namespace finsler
