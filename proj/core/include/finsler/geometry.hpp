#pragma once

#include <optional>
#include <vector>

#include "finsler/jet.hpp"
#include "finsler/metric.hpp"
#include "finsler/tensor.hpp"
#include "finsler/types.hpp"

namespace finsler {

/// Jet pipeline at a single tangent point.
///
/// One order-K jet of F^2 in the 2n chart/fiber variables feeds every derived
/// tensor; each accessor states the minimum K it needs and fails hard when
/// the budget is too small. Index conventions:
///
///   g(i,j)            fundamental tensor, lowered
///   ginv(i,j)         inverse metric
///   cartan(i,j,k)     A_ijk = (F/2) dg_ij/dy^k, totally symmetric, lowered
///   cartan_mixed      A^i_jk = g^{is} A_sjk
///   cnorm_mixed       C^i_jk = A^i_jk / F
///   gamma(i,j,k)      formal Christoffel symbols, symmetric in (j,k)
///   spray()[i]        G^i = (1/2) gamma^i_ab y^a y^b
///   nonlinear(i,j)    canonical N^i_j (1-homogeneous)
///   base(i,j,k)       horizontal Levi-Civita analogue built from the
///                     delta-derivative of g; j = section slot, k = direction
///   adot(i,j,k)       flow derivative of the Cartan tensor, lowered
///
/// Evaluators are pure; distinct Geometry instances never share state.
class Geometry {
 public:
  Geometry(const MetricInstance& m, const TangentPoint& p, int order);

  const MetricInstance& metric() const { return m_; }
  const TangentPoint& point() const { return p_; }
  int n() const { return n_; }
  int order() const { return order_; }

  const std::vector<Jet>& xj() const { return xj_; }
  const std::vector<Jet>& yj() const { return yj_; }

  const Jet& f2();
  const Jet& f();
  const Tensor<Jet>& g();
  const Tensor<Jet>& ginv();
  const Tensor<Jet>& cartan();
  const Tensor<Jet>& cartan_mixed();
  const Tensor<Jet>& cnorm_mixed();
  const Tensor<Jet>& gamma();
  const std::vector<Jet>& spray();
  const Tensor<Jet>& nonlinear();
  const Tensor<Jet>& base();
  const Tensor<Jet>& adot();
  const Tensor<Jet>& adot_mixed();
  /// Flow derivative of adot; needs the full order-5 budget.
  const Tensor<double>& addot_values();

  Vec ell_up();
  Vec ell_down();
  double cond_g();

  /// delta/delta x^k of a jet quantity, evaluated at the point.
  double delta_value(const Jet& q, int k);
  /// Same as a jet one order down.
  Jet delta_jet(const Jet& q, int k);

  Tensor<double> values_of(const Tensor<Jet>& t) const;

 private:
  void require_order(int k, const char* what) const;

  const MetricInstance& m_;
  TangentPoint p_;
  int n_;
  int order_;
  std::vector<Jet> xj_, yj_;

  std::optional<Jet> f2_, f_;
  std::optional<Tensor<Jet>> g_, ginv_, A_, Amix_, Cmix_, gamma_, N_, base_, adot_, adot_mixed_;
  std::optional<std::vector<Jet>> G_;
  std::optional<Tensor<double>> addot_;
  std::optional<double> cond_;
};

/// Cholesky-based positive-definiteness test; throws StrongConvexityError
/// naming the point on failure.
void require_positive_definite(const Tensor<double>& g, const MetricInstance& m,
                               const TangentPoint& p);

Tensor<double> invert_spd(const Tensor<double>& g);

}  // namespace finsler
