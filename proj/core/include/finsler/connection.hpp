#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>

#include "finsler/geometry.hpp"
#include "finsler/metric.hpp"
#include "finsler/scalar_field.hpp"
#include "finsler/tensor.hpp"

namespace finsler {

/// Family coordinates of the connection zoo: the horizontal compatible tensor
/// is kappa_0 A + kappa_1 Adot + kappa_2 Addot + kappa_3 Atdot and the torsion
/// tensor is r A. Named presets:
///   berwald    (k0=1, k1=1; r=0)
///   chern      (k0=1;       r=0)
///   cartan     (k0=1;       r=1)
///   hashiguchi (k0=1, k1=1; r=1)
///   shen       (all kappa 0; r=0)
struct ConnectionParams {
  std::array<double, 4> kappa{0.0, 0.0, 0.0, 0.0};
  double r = 0.0;
  std::string preset;  // empty for custom parameters

  static ConnectionParams from_preset(std::string_view name);
  static ConnectionParams general(std::array<double, 4> kappa, double r);

  /// Curvature and vertical derivatives of the assembled coefficients need
  /// jets beyond order 5 once the second iterated tensor enters the family.
  bool within_jet_budget() const { return kappa[2] == 0.0 && kappa[3] == 0.0; }
  std::string label() const;
};

struct ConnectionCoefficients {
  TensorBlock N;      // N^i_j, 1-homogeneous
  TensorBlock Gamma;  // Gamma^k_ij with direction slot i, section slot j
  TensorBlock V;      // V^k_ij = r C^k_ij, (-1)-homogeneous
};

/// gamma^k_ij, the formal Christoffel symbols of g.
TensorBlock formal_christoffel(const MetricInstance& m, const TangentPoint& p);

/// Canonical nonlinear connection.
TensorBlock nonlinear_connection(const MetricInstance& m, const TangentPoint& p);

/// Independent oracle: N^i_j = dG^i/dy^j with G from the standard spray
/// formula in terms of F^2 derivatives (no Christoffel assembly involved).
TensorBlock spray_connection_oracle(const MetricInstance& m, const TangentPoint& p);

/// Spray coefficients G^i from the standard formula.
Vec spray_coefficients(const MetricInstance& m, const TangentPoint& p);

/// delta f / delta x^j = (d/dx^j - N^i_j d/dy^i) f for each j.
Vec delta_derivative(const MetricInstance& m, const TangentPoint& p, const ScalarField& field);

ConnectionCoefficients christoffel(const MetricInstance& m, const TangentPoint& p,
                                   const ConnectionParams& c);

TensorBlock vertical_coefficients(const MetricInstance& m, const TangentPoint& p,
                                  const ConnectionParams& c);

/// Residual of V as the fixed point of the vertical coefficient equation
/// V^k_ij = r C^k_ij + y^l V^s_jl C^k_si (the contraction term vanishes).
double vertical_fixed_point_residual(const MetricInstance& m, const TangentPoint& p,
                                     const ConnectionParams& c);

/// Iterated flow derivatives of the Cartan tensor. q = 0 returns A itself,
/// q = 1 the analytic Landsberg tensor; q = 2, 3 differentiate the transported
/// Landsberg profile in time with Richardson extrapolation.
TensorBlock iterated_cartan(const MetricInstance& m, const TangentPoint& p, int q);

TensorBlock landsberg_analytic(const MetricInstance& m, const TangentPoint& p);
/// Second flow derivative through the order-5 jet budget; cross-checks the
/// transport path.
TensorBlock landsberg_second_analytic(const MetricInstance& m, const TangentPoint& p);

// --- covariant derivatives ---------------------------------------------------

/// A tensor field evaluable as jets at a point, with per-slot index placement.
struct JetTensorField {
  std::string name;
  int rank = 2;
  std::vector<bool> raised;  // size == rank
  int min_order = 3;         // geometry order for order-1 component jets
  std::function<Tensor<Jet>(Geometry&)> eval;
};

JetTensorField metric_field();
JetTensorField cartan_field();
JetTensorField landsberg_field();
JetTensorField cnorm_field();
/// kappa_1 * Adot (the derivative part of the horizontal compatible tensor).
JetTensorField stilde_field(const ConnectionParams& c);

/// Horizontal covariant derivative; output carries one extra (last) slot.
Tensor<double> h_cov_deriv(const MetricInstance& m, const TangentPoint& p,
                           const ConnectionParams& c, const JetTensorField& field);

/// Vertical covariant derivative along F d/dy^k, same layout.
Tensor<double> v_cov_deriv(const MetricInstance& m, const TangentPoint& p,
                           const ConnectionParams& c, const JetTensorField& field);

// --- identity evaluators ------------------------------------------------------

struct MetricDefect {
  Tensor<double> horizontal;  // g_ij|k
  Tensor<double> vertical;    // g_ij.k
  double h_series_residual;   // vs 2(1-k0)A - 2k1 Adot - 2k2 Addot - 2k3 Atdot
  double v_series_residual;   // vs 2(1-r)A
};
MetricDefect metric_compatibility_defect(const MetricInstance& m, const TangentPoint& p,
                                         const ConnectionParams& c);

struct EllResiduals {
  double horizontal;  // max |ell^i A_ijk|l|
  double vertical;    // max |ell^i A_ijk.l + A_jkl|
};
EllResiduals cartan_ell_residuals(const MetricInstance& m, const TangentPoint& p,
                                  const ConnectionParams& c);

/// Residual of Gamma^k_ij - Gamma^k_ji = r (N^s_i C^k_sj - N^s_j C^k_si).
double torsion_residual(const MetricInstance& m, const TangentPoint& p,
                        const ConnectionParams& c);

/// Literal per-preset assembly, sharing only the primitive tensors with the
/// general kappa/r path.
Tensor<double> preset_christoffel_literal(const MetricInstance& m, const TangentPoint& p,
                                          std::string_view preset);

/// Gamma difference of two parameter sets, raised layout (k; direction; section).
Tensor<double> christoffel_difference(const MetricInstance& m, const TangentPoint& p,
                                      const ConnectionParams& a, const ConnectionParams& b);

// internal building blocks shared with the curvature module
namespace detail {
Tensor<Jet> gammahat_jets(Geometry& geo, const ConnectionParams& c);
Tensor<double> gammahat_values(const MetricInstance& m, const TangentPoint& p,
                               const ConnectionParams& c, Geometry& geo);
int geometry_order_for(const ConnectionParams& c, int field_min_order);
}  // namespace detail

}  // namespace finsler
