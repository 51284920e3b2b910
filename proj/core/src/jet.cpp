#include "finsler/jet.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace finsler {

namespace {

int key_degree(std::uint32_t k) {
  int d = 0;
  for (int v = 0; v < kMaxJetVars; ++v) d += static_cast<int>((k >> (4 * v)) & 0xFu);
  return d;
}

constexpr double kFact[16] = {1,    1,     2,      6,       24,      120,
                              720,  5040,  40320,  362880,  3628800, 39916800,
                              479001600, 6227020800.0, 87178291200.0, 1307674368000.0};

}  // namespace

MultiIndex MultiIndex::unit(int var) { return MultiIndex(1u << (4 * var)); }

MultiIndex MultiIndex::from_exponents(std::span<const int> exps) {
  std::uint32_t key = 0;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    key |= static_cast<std::uint32_t>(exps[v] & 0xF) << (4 * v);
  }
  return MultiIndex(key);
}

int MultiIndex::degree() const { return key_degree(key_); }

MultiIndex MultiIndex::plus(const MultiIndex& o) const {
  // nibbles stay below 16 for any degree the engine accepts
  return MultiIndex(key_ + o.key_);
}

MultiIndex MultiIndex::minus(const MultiIndex& o) const { return MultiIndex(key_ - o.key_); }

bool MultiIndex::contains(const MultiIndex& o) const {
  for (int v = 0; v < kMaxJetVars; ++v) {
    if (exponent(v) < o.exponent(v)) return false;
  }
  return true;
}

double MultiIndex::factorial() const {
  double f = 1.0;
  for (int v = 0; v < kMaxJetVars; ++v) f *= kFact[exponent(v)];
  return f;
}

std::string MultiIndex::str(int nvars) const {
  std::string s = "(";
  for (int v = 0; v < nvars; ++v) {
    if (v) s += ",";
    s += std::to_string(exponent(v));
  }
  s += ")";
  return s;
}

Jet Jet::variable(double v, int var, int order) {
  if (order < 0 || order > kMaxJetOrder) {
    throw OrderExceededError("jet order " + std::to_string(order) + " outside [0, " +
                             std::to_string(kMaxJetOrder) + "]");
  }
  Jet j;
  j.order_ = order;
  if (v != 0.0) j.terms_.emplace_back(0u, v);
  if (order >= 1) j.terms_.emplace_back(MultiIndex::unit(var).key(), 1.0);
  return j;
}

double Jet::value() const {
  if (!terms_.empty() && terms_.front().first == 0u) return terms_.front().second;
  return 0.0;
}

double Jet::coeff(const MultiIndex& a) const {
  if (!is_constant() && a.degree() > order_) {
    throw OrderExceededError("coefficient of degree " + std::to_string(a.degree()) +
                             " requested from an order-" + std::to_string(order_) + " jet");
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), a.key(),
                             [](const auto& t, std::uint32_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == a.key()) return it->second;
  return 0.0;
}

double Jet::derivative(const MultiIndex& a) const { return coeff(a) * a.factorial(); }

double Jet::derivative_var(int var) const { return derivative(MultiIndex::unit(var)); }

Jet Jet::derivative_jet(const MultiIndex& a) const {
  const int da = a.degree();
  if (da == 0) return *this;
  if (is_constant()) return Jet(0.0);
  if (da > order_) {
    throw OrderExceededError("derivative of order " + std::to_string(da) +
                             " requested from an order-" + std::to_string(order_) + " jet");
  }
  Jet out;
  out.order_ = order_ - da;
  out.terms_.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    bool ok = true;
    for (int v = 0; v < kMaxJetVars; ++v) {
      if (static_cast<int>((key >> (4 * v)) & 0xFu) < a.exponent(v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const std::uint32_t nk = key - a.key();
    // c'_b = c_{a+b} * (a+b)!/b!
    double factor = 1.0;
    for (int v = 0; v < kMaxJetVars; ++v) {
      const int av = a.exponent(v);
      const int bv = static_cast<int>((nk >> (4 * v)) & 0xFu);
      for (int t = 1; t <= av; ++t) factor *= static_cast<double>(bv + t);
    }
    out.terms_.emplace_back(nk, c * factor);
  }
  // subtracting the same key offset keeps the surviving terms sorted
  return out;
}

void Jet::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    const std::uint32_t k = terms_[i].first;
    double s = 0.0;
    while (i < terms_.size() && terms_[i].first == k) s += terms_[i++].second;
    if (s != 0.0) terms_[w++] = {k, s};
  }
  terms_.resize(w);
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet out;
  out.order_ = std::min(a.order_, b.order_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      const double s = a.terms_[i].second + b.terms_[j].second;
      if (s != 0.0) out.terms_.emplace_back(a.terms_[i].first, s);
      ++i, ++j;
    }
  }
  if (out.order_ < Jet::kConstantOrder && (a.order_ != b.order_)) {
    std::erase_if(out.terms_, [&](const auto& t) { return key_degree(t.first) > out.order_; });
  }
  return out;
}

Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

Jet operator-(const Jet& a) {
  Jet out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Jet& Jet::operator+=(const Jet& o) {
  *this = *this + o;
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  *this = *this - o;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  const int order = std::min(a.order_, b.order_);
  const int cap = std::min(order, kMaxJetOrder);
  Jet out;
  out.order_ = order;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, va] : a.terms_) {
    const int da = key_degree(ka);
    for (const auto& [kb, vb] : b.terms_) {
      if (da + key_degree(kb) > cap) continue;
      out.terms_.emplace_back(ka + kb, va * vb);
    }
  }
  out.normalize();
  return out;
}

Jet compose(const Jet& u, std::span<const double> c) {
  if (u.is_constant() || u.order_ == 0 || c.size() == 1) {
    Jet out(c[0]);
    if (!u.is_constant()) out.order_ = u.order_;
    return out;
  }
  Jet w = u;
  if (!w.terms_.empty() && w.terms_.front().first == 0u) w.terms_.erase(w.terms_.begin());
  const int kmax = std::min<int>(static_cast<int>(c.size()) - 1, std::min(u.order_, kMaxJetOrder));
  Jet r(c[kmax]);
  for (int k = kmax - 1; k >= 0; --k) r = r * w + Jet(c[k]);
  r.order_ = u.order_;
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  const double b0 = b.value();
  if (b0 == 0.0) throw SingularMetricError("jet division by zero value");
  if (b.is_constant()) {
    Jet out = a;
    for (auto& t : out.terms_) t.second /= b0;
    return out;
  }
  const int kmax = std::min(b.order_, kMaxJetOrder);
  std::array<double, kMaxJetOrder + 1> c{};
  double p = 1.0 / b0;
  for (int k = 0; k <= kmax; ++k) {
    c[k] = p;  // (-1)^k / b0^{k+1}
    p *= -1.0 / b0;
  }
  return a * compose(b, std::span<const double>(c.data(), kmax + 1));
}

Jet sqrt(const Jet& a) {
  const double a0 = a.value();
  if (a0 <= 0.0) throw DomainError("jet sqrt of non-positive value");
  const int kmax = a.is_constant() ? 0 : std::min(a.order(), kMaxJetOrder);
  std::array<double, kMaxJetOrder + 1> c{};
  c[0] = std::sqrt(a0);
  for (int k = 1; k <= kmax; ++k) {
    c[k] = c[k - 1] * (0.5 - (k - 1)) / (static_cast<double>(k) * a0);
  }
  return compose(a, std::span<const double>(c.data(), kmax + 1));
}

Jet pow(const Jet& a, double p) {
  if (p == std::floor(p) && p >= 0.0 && p <= 8.0) {
    // exact product chain, valid for any sign of the value
    int ip = static_cast<int>(p);
    Jet out(1.0);
    Jet base = a;
    while (ip > 0) {
      if (ip & 1) out = out * base;
      base = base * base;
      ip >>= 1;
    }
    return out;
  }
  const double a0 = a.value();
  if (a0 <= 0.0) throw DomainError("jet pow of non-positive value with non-integer exponent");
  const int kmax = a.is_constant() ? 0 : std::min(a.order(), kMaxJetOrder);
  std::array<double, kMaxJetOrder + 1> c{};
  c[0] = std::pow(a0, p);
  for (int k = 1; k <= kmax; ++k) {
    c[k] = c[k - 1] * (p - (k - 1)) / (static_cast<double>(k) * a0);
  }
  return compose(a, std::span<const double>(c.data(), kmax + 1));
}

Jet sin(const Jet& a) {
  const double a0 = a.value();
  const int kmax = a.is_constant() ? 0 : std::min(a.order(), kMaxJetOrder);
  const double s = std::sin(a0), co = std::cos(a0);
  const double cycle[4] = {s, co, -s, -co};
  std::array<double, kMaxJetOrder + 1> c{};
  for (int k = 0; k <= kmax; ++k) c[k] = cycle[k % 4] / kFact[k];
  return compose(a, std::span<const double>(c.data(), kmax + 1));
}

Jet cos(const Jet& a) {
  const double a0 = a.value();
  const int kmax = a.is_constant() ? 0 : std::min(a.order(), kMaxJetOrder);
  const double s = std::sin(a0), co = std::cos(a0);
  const double cycle[4] = {co, -s, -co, s};
  std::array<double, kMaxJetOrder + 1> c{};
  for (int k = 0; k <= kmax; ++k) c[k] = cycle[k % 4] / kFact[k];
  return compose(a, std::span<const double>(c.data(), kmax + 1));
}

Jet exp(const Jet& a) {
  const double e0 = std::exp(a.value());
  const int kmax = a.is_constant() ? 0 : std::min(a.order(), kMaxJetOrder);
  std::array<double, kMaxJetOrder + 1> c{};
  for (int k = 0; k <= kmax; ++k) c[k] = e0 / kFact[k];
  return compose(a, std::span<const double>(c.data(), kmax + 1));
}

}  // namespace finsler
