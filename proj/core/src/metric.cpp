#include "finsler/metric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace finsler {

std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os.precision(12);
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string format_point(const TangentPoint& p) {
  return "x=" + format_vec(p.x) + " y=" + format_vec(p.y);
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

bool ChartDomain::contains_x(const Vec& x) const {
  if (shape == Shape::ball) return norm2(x) < radius;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= lo[i] || x[i] >= hi[i]) return false;
  }
  return true;
}

bool ChartDomain::admits_y(const Vec& y) const {
  const double ny = norm2(y);
  if (!(ny > 0.0)) return false;
  if (y_cone > 0.0) {
    for (double yi : y) {
      if (std::abs(yi) < y_cone * ny) return false;
    }
  }
  return true;
}

std::string to_string(MetricKind k) {
  switch (k) {
    case MetricKind::euclidean: return "euclidean";
    case MetricKind::riemannian: return "riemannian";
    case MetricKind::minkowski_quartic: return "minkowski_quartic";
    case MetricKind::randers: return "randers";
    case MetricKind::funk_disk: return "funk_disk";
  }
  return "?";
}

namespace {

ChartDomain unit_box(int n, double half) {
  ChartDomain d;
  d.shape = ChartDomain::Shape::box;
  d.lo.assign(n, -half);
  d.hi.assign(n, half);
  return d;
}

}  // namespace

MetricInstance MetricInstance::euclidean(int n) {
  MetricInstance m;
  m.kind_ = MetricKind::euclidean;
  m.n_ = n;
  m.chart_ = unit_box(n, 1.0);
  return m;
}

MetricInstance MetricInstance::riemannian_diag(Vec diag) {
  MetricInstance m;
  m.kind_ = MetricKind::riemannian;
  m.rspec_ = RiemannSpec::diag_const;
  m.n_ = static_cast<int>(diag.size());
  for (double d : diag) {
    if (!(d > 0.0)) throw ConfigError("metric.params.a", "diagonal entries must be positive");
  }
  m.diag_ = std::move(diag);
  m.chart_ = unit_box(m.n_, 1.0);
  return m;
}

MetricInstance MetricInstance::riemannian_polar() {
  MetricInstance m;
  m.kind_ = MetricKind::riemannian;
  m.rspec_ = RiemannSpec::polar;
  m.n_ = 2;
  m.chart_.shape = ChartDomain::Shape::box;
  m.chart_.lo = {0.5, -3.0};
  m.chart_.hi = {2.0, 3.0};
  return m;
}

MetricInstance MetricInstance::riemannian_sphere() {
  MetricInstance m;
  m.kind_ = MetricKind::riemannian;
  m.rspec_ = RiemannSpec::sphere;
  m.n_ = 2;
  m.chart_.shape = ChartDomain::Shape::box;
  m.chart_.lo = {0.4, -8.0};
  m.chart_.hi = {std::numbers::pi - 0.4, 8.0};
  return m;
}

MetricInstance MetricInstance::minkowski_quartic(int n) {
  MetricInstance m;
  m.kind_ = MetricKind::minkowski_quartic;
  m.n_ = n;
  m.chart_ = unit_box(n, 1.0);
  // g degenerates on the coordinate hyperplanes y_i = 0
  m.chart_.y_cone = 0.2;
  return m;
}

MetricInstance MetricInstance::randers(int n, Vec b) {
  Mat a(n, Vec(n, 0.0));
  for (int i = 0; i < n; ++i) a[i][i] = 1.0;
  return randers_general(std::move(a), std::move(b));
}

MetricInstance MetricInstance::randers_general(Mat a, Vec b) {
  MetricInstance m;
  m.kind_ = MetricKind::randers;
  m.n_ = static_cast<int>(b.size());
  if (a.size() != b.size()) throw ConfigError("metric.params.a", "a must be n x n");
  // ||b||_a < 1 keeps F positive and g positive-definite
  double bb = 0.0;
  for (int i = 0; i < m.n_; ++i)
    for (int j = 0; j < m.n_; ++j) bb += a[i][j] * b[i] * b[j];
  if (!(bb < 1.0)) {
    throw ConfigError("metric.params.b", "randers requires ||b||_a < 1, got ||b||_a^2 = " +
                                             std::to_string(bb));
  }
  m.a_ = std::move(a);
  m.b_ = std::move(b);
  m.chart_ = unit_box(m.n_, 1.0);
  return m;
}

MetricInstance MetricInstance::funk_disk(int n, double margin) {
  MetricInstance m;
  m.kind_ = MetricKind::funk_disk;
  m.n_ = n;
  m.margin_ = margin;
  m.chart_.shape = ChartDomain::Shape::ball;
  m.chart_.radius = 1.0 - margin;
  return m;
}

std::string MetricInstance::name() const { return to_string(kind_); }

double MetricInstance::eval_f(const TangentPoint& p) const {
  require_admissible(p);
  const double f2 =
      f_squared<double>(std::span<const double>(p.x), std::span<const double>(p.y));
  return std::sqrt(f2);
}

bool MetricInstance::admissible(const TangentPoint& p) const {
  return static_cast<int>(p.x.size()) == n_ && static_cast<int>(p.y.size()) == n_ &&
         chart_.contains_x(p.x) && chart_.admits_y(p.y);
}

void MetricInstance::require_admissible(const TangentPoint& p) const {
  if (!admissible(p)) {
    throw DomainError("inadmissible point for metric " + name() + ": " + format_point(p));
  }
}

}  // namespace finsler
