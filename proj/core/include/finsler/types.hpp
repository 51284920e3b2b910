#pragma once

#include <string>
#include <vector>

namespace finsler {

using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;

/// A chart point x with a nonzero tangent vector y; the evaluation site for
/// every tensor in the engine.
struct TangentPoint {
  Vec x;
  Vec y;
};

std::string format_vec(const Vec& v);
std::string format_point(const TangentPoint& p);

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);

/// Chart box or ball, plus an optional fiber cone restriction
/// (min_i |y_i| >= y_cone * |y|) for metrics that lose strong convexity on
/// coordinate hyperplanes.
struct ChartDomain {
  enum class Shape { box, ball };
  Shape shape = Shape::box;
  Vec lo, hi;          // box bounds
  double radius = 1.0;  // ball radius
  double y_cone = 0.0;

  bool contains_x(const Vec& x) const;
  bool admits_y(const Vec& y) const;
};

}  // namespace finsler
