#pragma once

#include <functional>
#include <span>

#include "finsler/jet.hpp"
#include "finsler/metric.hpp"
#include "finsler/types.hpp"

namespace finsler {

/// A scalar quantity f(x, y) on the chart, evaluable on plain doubles and on
/// jets. Multi-indices run over the 2n variables (x^1..x^n, y^1..y^n).
struct ScalarField {
  int dim = 2;
  std::function<Jet(std::span<const Jet> x, std::span<const Jet> y)> eval_jets;
  std::function<double(std::span<const double> x, std::span<const double> y)> eval;
  const MetricInstance* domain = nullptr;  // optional admissibility authority

  void require_admissible(const TangentPoint& p) const;
};

ScalarField f2_field(const MetricInstance& m);
ScalarField f_field(const MetricInstance& m);

/// Exact partial derivative d^idx f at p via directional jets.
/// idx lists one exponent per variable (size 2n, total order <= 5).
double partial(const ScalarField& field, const TangentPoint& p, std::span<const int> idx);

/// Central finite difference with one Richardson extrapolation step.
/// Independent of the jet engine; |idx| <= 4.
double fd_partial(const ScalarField& field, const TangentPoint& p, std::span<const int> idx,
                  double h);

double fd_default_step(const TangentPoint& p, int order);

}  // namespace finsler
