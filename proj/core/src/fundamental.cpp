#include "finsler/fundamental.hpp"

namespace finsler {

double eval_F(const MetricInstance& m, const TangentPoint& p) { return m.eval_f(p); }

TensorBlock fundamental_tensor(const MetricInstance& m, const TangentPoint& p) {
  Geometry geo(m, p, 2);
  TensorBlock out;
  out.values = geo.values_of(geo.g());
  out.symmetric_groups = {{0, 1}};
  out.homogeneity = 0;
  return out;
}

TensorBlock inverse_metric(const MetricInstance& m, const TangentPoint& p) {
  Geometry geo(m, p, 2);
  TensorBlock out;
  out.values = geo.values_of(geo.ginv());
  out.symmetric_groups = {{0, 1}};
  out.homogeneity = 0;
  return out;
}

TensorBlock cartan_tensor(const MetricInstance& m, const TangentPoint& p) {
  Geometry geo(m, p, 3);
  TensorBlock out;
  out.values = symmetrize3(geo.values_of(geo.cartan()));
  out.symmetric_groups = {{0, 1, 2}};
  out.homogeneity = 0;
  return out;
}

Tensor<double> cartan_tensor_raw(const MetricInstance& m, const TangentPoint& p) {
  // differentiate each slot independently instead of reusing the symmetric store
  Geometry geo(m, p, 3);
  const int n = m.dim();
  const Jet& f2 = geo.f2();
  const double fv = geo.f().value();
  Tensor<double> out(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        MultiIndex idx = MultiIndex::unit(n + i)
                             .plus(MultiIndex::unit(n + j))
                             .plus(MultiIndex::unit(n + k));
        out(i, j, k) = 0.25 * fv * f2.derivative(idx);
      }
  return out;
}

TensorBlock normalized_cartan(const MetricInstance& m, const TangentPoint& p) {
  Geometry geo(m, p, 3);
  TensorBlock out;
  out.values = geo.values_of(geo.cnorm_mixed());
  out.symmetric_groups = {{1, 2}};
  out.homogeneity = -1;
  return out;
}

UnitEll unit_ell(const MetricInstance& m, const TangentPoint& p) {
  Geometry geo(m, p, 2);
  return UnitEll{geo.ell_up(), geo.ell_down()};
}

double metric_condition(const MetricInstance& m, const TangentPoint& p) {
  Geometry geo(m, p, 2);
  return geo.cond_g();
}

}  // namespace finsler
