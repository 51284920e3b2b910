#include <cmath>
#include <vector>

#include "finsler/scalar_field.hpp"

namespace finsler {

void ScalarField::require_admissible(const TangentPoint& p) const {
  if (domain) {
    domain->require_admissible(p);
    return;
  }
  if (static_cast<int>(p.x.size()) != dim || static_cast<int>(p.y.size()) != dim) {
    throw DomainError("point dimension does not match field dimension");
  }
  if (norm2(p.y) == 0.0) throw DomainError("y = 0 is outside the slit tangent bundle");
}

ScalarField f2_field(const MetricInstance& m) {
  ScalarField f;
  f.dim = m.dim();
  f.domain = &m;
  f.eval_jets = [&m](std::span<const Jet> x, std::span<const Jet> y) {
    return m.f_squared<Jet>(x, y);
  };
  f.eval = [&m](std::span<const double> x, std::span<const double> y) {
    return m.f_squared<double>(x, y);
  };
  return f;
}

ScalarField f_field(const MetricInstance& m) {
  ScalarField f = f2_field(m);
  auto j = f.eval_jets;
  auto d = f.eval;
  f.eval_jets = [j](std::span<const Jet> x, std::span<const Jet> y) { return sqrt(j(x, y)); };
  f.eval = [d](std::span<const double> x, std::span<const double> y) {
    return std::sqrt(d(x, y));
  };
  return f;
}

double partial(const ScalarField& field, const TangentPoint& p, std::span<const int> idx) {
  field.require_admissible(p);
  const int n = field.dim;
  int order = 0;
  for (int e : idx) order += e;
  if (order > kMaxJetOrder) {
    throw OrderExceededError("partial of total order " + std::to_string(order) +
                             " exceeds the jet limit " + std::to_string(kMaxJetOrder));
  }
  // seed only the directions the request actually differentiates
  std::vector<Jet> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = (i < static_cast<int>(idx.size()) && idx[i] > 0) ? Jet::variable(p.x[i], i, order)
                                                             : Jet(p.x[i]);
    const int v = n + i;
    ys[i] = (v < static_cast<int>(idx.size()) && idx[v] > 0) ? Jet::variable(p.y[i], v, order)
                                                             : Jet(p.y[i]);
  }
  Jet r = field.eval_jets(xs, ys);
  return r.derivative(MultiIndex::from_exponents(idx));
}

namespace {

double coordinate_scale(const TangentPoint& p) {
  double s = 1.0;
  for (double v : p.x) s = std::max(s, std::abs(v));
  for (double v : p.y) s = std::max(s, std::abs(v));
  return s;
}

// nested central differences, same step at every level
double central(const ScalarField& field, TangentPoint p, std::vector<int> idx, double h) {
  int var = -1;
  for (std::size_t v = 0; v < idx.size(); ++v) {
    if (idx[v] > 0) {
      var = static_cast<int>(v);
      break;
    }
  }
  if (var < 0) return field.eval(p.x, p.y);
  idx[var]--;
  const int n = field.dim;
  double& coord = (var < n) ? p.x[var] : p.y[var - n];
  const double saved = coord;
  coord = saved + h;
  const double fp = central(field, p, idx, h);
  coord = saved - h;
  const double fm = central(field, p, idx, h);
  coord = saved;
  return (fp - fm) / (2.0 * h);
}

}  // namespace

double fd_default_step(const TangentPoint& p, int order) {
  const double eps = 2.220446049250313e-16;
  return std::pow(eps, 1.0 / (4.0 + order)) * coordinate_scale(p);
}

double fd_partial(const ScalarField& field, const TangentPoint& p, std::span<const int> idx,
                  double h) {
  field.require_admissible(p);
  int order = 0;
  for (int e : idx) order += e;
  if (order > 4) {
    throw OrderExceededError("fd_partial supports total order <= 4, got " +
                             std::to_string(order));
  }
  if (!(h > 0.0)) throw StepUnderflowError("fd_partial step must be positive");
  if (h < 1e-7 * coordinate_scale(p)) {
    throw StepUnderflowError("fd_partial step " + std::to_string(h) +
                             " underflows the coordinate scale");
  }
  std::vector<int> e(idx.begin(), idx.end());
  const double coarse = central(field, p, e, h);
  const double fine = central(field, p, e, 0.5 * h);
  // one Richardson step on the O(h^2) stencil
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace finsler
