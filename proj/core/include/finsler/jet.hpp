#pragma once

#include <span>
#include <utility>
#include <vector>

#include "finsler/errors.hpp"
#include "finsler/multi_index.hpp"

namespace finsler {

/// Truncated multivariate Taylor expansion with sparse coefficient storage.
///
/// A jet of order K carries every Taylor coefficient c_a = d^a f / a! of a
/// scalar quantity for |a| <= K. Arithmetic is exact truncated Taylor
/// algebra, so derivatives of composite expressions are exact up to rounding.
/// Plain doubles embed as exact constants that never limit the truncation
/// order of an expression.
class Jet {
 public:
  Jet() = default;          // exact zero
  Jet(double v) : terms_() {  // NOLINT: implicit by design for generic code
    if (v != 0.0) terms_.emplace_back(0u, v);
  }

  static Jet constant(double v) { return Jet(v); }
  static Jet variable(double v, int var, int order);

  /// Truncation order; exact constants report kConstantOrder.
  static constexpr int kConstantOrder = 127;
  int order() const { return order_; }
  bool is_constant() const { return order_ == kConstantOrder; }

  double value() const;
  /// Taylor coefficient c_a; requesting |a| beyond the truncation is an error.
  double coeff(const MultiIndex& a) const;
  /// Partial derivative d^a f = c_a * a!.
  double derivative(const MultiIndex& a) const;
  double derivative_var(int var) const;
  /// Jet of the derivative function d^a f, truncated at order() - |a|.
  Jet derivative_jet(const MultiIndex& a) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o) { *this = *this * o; return *this; }
  Jet& operator/=(const Jet& o) { *this = *this / o; return *this; }

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

  friend Jet sqrt(const Jet& a);
  friend Jet pow(const Jet& a, double p);
  friend Jet sin(const Jet& a);
  friend Jet cos(const Jet& a);
  friend Jet exp(const Jet& a);

  /// Truncated Taylor composition f(u) with c[k] = f^(k)(u.value())/k!.
  friend Jet compose(const Jet& u, std::span<const double> c);

  std::size_t term_count() const { return terms_.size(); }

 private:
  friend class JetTestAccess;
  void normalize();

  int order_ = kConstantOrder;
  // sorted by packed key, exact zeros pruned
  std::vector<std::pair<std::uint32_t, double>> terms_;
};

}  // namespace finsler
