#pragma once

#include <optional>
#include <vector>

#include "finsler/metric.hpp"
#include "finsler/tensor.hpp"
#include "finsler/types.hpp"

namespace finsler {

/// Unit-speed geodesic with a parallel frame. frames[s][a] holds the
/// components of the a-th frame vector at step s; transport uses the
/// metric-compatible horizontal coefficients contracted with the velocity,
/// which along the flow coincide for every member of the connection family.
struct GeodesicTrace {
  MetricInstance metric;
  std::vector<double> times;
  std::vector<Vec> xs, ys;
  std::vector<Mat> frames;
  bool truncated = false;

  int steps() const { return static_cast<int>(times.size()) - 1; }
};

/// Integrates xdd + 2G(x, xd) = 0 with classic fourth-order stepping.
/// y0 is normalized to unit F; the trace truncates (with a flag) if the
/// curve leaves the chart. A custom initial frame may be supplied; the
/// default is g-orthonormal with the unit direction last.
GeodesicTrace integrate_geodesic(const MetricInstance& m, Vec x0, Vec y0, double t0, double t1,
                                 int steps, const std::optional<Mat>& frame0 = std::nullopt);

/// Max |F(x,y) - 1| along the trace.
double unit_speed_drift(const GeodesicTrace& trace);
/// Max drift of g(E_a, E_b) from its initial value.
double frame_gram_drift(const GeodesicTrace& trace);

/// Cartan-tensor time profiles on a transported triple.
struct CartanProfile {
  std::vector<double> t;
  std::vector<double> A, Adot, Addot;
};
CartanProfile profile_cartan(const GeodesicTrace& trace, const Vec& X, const Vec& Y,
                             const Vec& Z);

/// sup |d(Adot)/dt - Addot| using interior 5-point and one-sided 4-point
/// stencils on the trace grid.
double profile_flow_residual(const CartanProfile& p);

/// Least-squares estimate of lambda in Addot + lambda A = 0.
double fit_lambda(const CartanProfile& p);

enum class FitForm { sinh_cosh, exponential, three_term };
FitForm fit_form_from_string(std::string_view s);

struct FitResult {
  std::vector<double> coeffs;
  double residual = 0.0;  // sup-norm of the fit error
};
/// Fits the profile against the solution family of the generating flow ODE:
///   sinh_cosh(k):  c1 sinh(sqrt(k) t) + c2 cosh(sqrt(k) t), k > 0
///   exponential(k): c1 e^{k t}
///   three_term(l):  c1 + c2 e^{sqrt(-l) t} + c3 e^{-sqrt(-l) t}, l < 0
FitResult fit_solution_form(std::span<const double> t, std::span<const double> values,
                            FitForm form, double param);

/// Landsberg tensor contracted on a parallel coordinate frame at the given
/// times along the unit-speed geodesic through p. Fails with ChartExitError
/// if the geodesic cannot cover the stencil.
std::vector<Tensor<double>> landsberg_profile_at_nodes(const MetricInstance& m,
                                                       const TangentPoint& p,
                                                       std::span<const double> ts);

std::string trace_csv(const GeodesicTrace& trace, const CartanProfile& profile);

}  // namespace finsler
