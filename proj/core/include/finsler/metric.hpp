#pragma once

#include <cmath>
#include <span>
#include <string>

#include "finsler/errors.hpp"
#include "finsler/types.hpp"

namespace finsler {

enum class MetricKind { euclidean, riemannian, minkowski_quartic, randers, funk_disk };

enum class RiemannSpec { diag_const, polar, sphere };

std::string to_string(MetricKind k);

/// A concrete Finsler metric from the closed zoo: kind, parameters, dimension
/// and chart domain. Evaluators are templated so the same formulas run on
/// plain doubles and on jets.
class MetricInstance {
 public:
  static MetricInstance euclidean(int n);
  static MetricInstance riemannian_diag(Vec diag);
  /// diag(1, (x1)^2) on x1 in [0.5, 2.0]; the classic curvilinear flat chart.
  static MetricInstance riemannian_polar();
  /// diag(1, sin^2 x1): the round unit sphere chart away from the poles.
  static MetricInstance riemannian_sphere();
  static MetricInstance minkowski_quartic(int n);
  static MetricInstance randers(int n, Vec b);
  static MetricInstance randers_general(Mat a, Vec b);
  static MetricInstance funk_disk(int n, double margin = 0.05);

  MetricKind kind() const { return kind_; }
  RiemannSpec riemann_spec() const { return rspec_; }
  int dim() const { return n_; }
  const ChartDomain& chart() const { return chart_; }
  std::string name() const;

  const Mat& randers_a() const { return a_; }
  const Vec& randers_b() const { return b_; }
  const Vec& diag() const { return diag_; }

  /// F^2(x, y); T is double or Jet.
  template <class T>
  T f_squared(std::span<const T> x, std::span<const T> y) const;

  double eval_f(const TangentPoint& p) const;

  bool admissible(const TangentPoint& p) const;
  void require_admissible(const TangentPoint& p) const;

 private:
  MetricInstance() = default;

  MetricKind kind_ = MetricKind::euclidean;
  RiemannSpec rspec_ = RiemannSpec::diag_const;
  int n_ = 2;
  ChartDomain chart_;
  Vec diag_;  // riemannian diag_const
  Mat a_;     // randers
  Vec b_;     // randers
  double margin_ = 0.05;
};

// --- templated evaluator -----------------------------------------------------

template <class T>
T MetricInstance::f_squared(std::span<const T> x, std::span<const T> y) const {
  using std::sqrt;
  switch (kind_) {
    case MetricKind::euclidean: {
      T s = y[0] * y[0];
      for (int i = 1; i < n_; ++i) s = s + y[i] * y[i];
      return s;
    }
    case MetricKind::riemannian: {
      if (rspec_ == RiemannSpec::diag_const) {
        T s = diag_[0] * (y[0] * y[0]);
        for (int i = 1; i < n_; ++i) s = s + diag_[i] * (y[i] * y[i]);
        return s;
      }
      if (rspec_ == RiemannSpec::polar) {
        return y[0] * y[0] + (x[0] * x[0]) * (y[1] * y[1]);
      }
      // sphere
      {
        using std::sin;
        T s1 = sin(x[0]);
        return y[0] * y[0] + (s1 * s1) * (y[1] * y[1]);
      }
    }
    case MetricKind::minkowski_quartic: {
      T q = (y[0] * y[0]) * (y[0] * y[0]);
      for (int i = 1; i < n_; ++i) q = q + (y[i] * y[i]) * (y[i] * y[i]);
      return sqrt(q);
    }
    case MetricKind::randers: {
      T a2 = T(0.0);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) a2 = a2 + a_[i][j] * (y[i] * y[j]);
      T alpha = sqrt(a2);
      T beta = T(0.0);
      for (int i = 0; i < n_; ++i) beta = beta + b_[i] * y[i];
      T f = alpha + beta;
      return f * f;
    }
    case MetricKind::funk_disk: {
      // positive root of (1-|x|^2) F^2 - 2<x,y> F - |y|^2 = 0, so that the
      // point x + y/F lies on the unit sphere
      T w = x[0] * y[0];
      T s = x[0] * x[0];
      T q = y[0] * y[0];
      for (int i = 1; i < n_; ++i) {
        w = w + x[i] * y[i];
        s = s + x[i] * x[i];
        q = q + y[i] * y[i];
      }
      T one_minus = T(1.0) - s;
      T f = (w + sqrt(w * w + one_minus * q)) / one_minus;
      return f * f;
    }
  }
  return T(0.0);
}

}  // namespace finsler
