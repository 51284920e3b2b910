#include "finsler/geometry.hpp"

#include <array>
#include <cmath>

namespace finsler {

Tensor<double> symmetrize3(const Tensor<double>& t) {
  const int n = t.n();
  Tensor<double> out(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        out(i, j, k) = (t(i, j, k) + t(i, k, j) + t(j, i, k) + t(j, k, i) + t(k, i, j) +
                        t(k, j, i)) /
                       6.0;
      }
  return out;
}

void require_positive_definite(const Tensor<double>& g, const MetricInstance& m,
                               const TangentPoint& p) {
  const int n = g.n();
  // plain Cholesky; tiny matrices only
  std::array<std::array<double, 4>, 4> L{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = g(i, j);
      for (int k = 0; k < j; ++k) s -= L[i][k] * L[j][k];
      if (i == j) {
        if (!(s > 0.0)) {
          throw StrongConvexityError("strong convexity violated for metric " + m.name() +
                                     " at " + format_point(p));
        }
        L[i][i] = std::sqrt(s);
      } else {
        L[i][j] = s / L[j][j];
      }
    }
  }
}

Tensor<double> invert_spd(const Tensor<double>& g) {
  const int n = g.n();
  // Gauss-Jordan with partial pivoting
  std::array<std::array<double, 8>, 4> a{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = g(i, j);
    a[i][n + i] = 1.0;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (a[piv][c] == 0.0) throw SingularMetricError("singular fundamental tensor");
    std::swap(a[piv], a[c]);
    const double inv = 1.0 / a[c][c];
    for (int j = 0; j < 2 * n; ++j) a[c][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0.0) continue;
      const double f = a[r][c];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Tensor<double> out(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = a[i][n + j];
  return out;
}

namespace {

/// Jet-valued Gauss-Jordan inverse, pivoting on values.
Tensor<Jet> invert_jet_matrix(const Tensor<Jet>& g) {
  const int n = g.n();
  std::vector<std::vector<Jet>> a(n, std::vector<Jet>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = g(i, j);
    a[i][n + i] = Jet(1.0);
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c].value()) > std::abs(a[piv][c].value())) piv = r;
    }
    if (a[piv][c].value() == 0.0) throw SingularMetricError("singular fundamental tensor");
    std::swap(a[piv], a[c]);
    const Jet pivot = a[c][c];
    for (int j = 0; j < 2 * n; ++j) a[c][j] = a[c][j] / pivot;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const Jet f = a[r][c];
      if (f.value() == 0.0 && f.term_count() == 0) continue;
      for (int j = 0; j < 2 * n; ++j) a[r][j] = a[r][j] - f * a[c][j];
    }
  }
  Tensor<Jet> out(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = a[i][n + j];
  return out;
}

}  // namespace

Geometry::Geometry(const MetricInstance& m, const TangentPoint& p, int order)
    : m_(m), p_(p), n_(m.dim()), order_(order) {
  m_.require_admissible(p_);
  if (order_ < 0 || order_ > kMaxJetOrder) {
    throw OrderExceededError("geometry jet order " + std::to_string(order_) + " outside [0, " +
                             std::to_string(kMaxJetOrder) + "]");
  }
  xj_.reserve(n_);
  yj_.reserve(n_);
  for (int i = 0; i < n_; ++i) xj_.push_back(Jet::variable(p_.x[i], i, order_));
  for (int i = 0; i < n_; ++i) yj_.push_back(Jet::variable(p_.y[i], n_ + i, order_));
}

void Geometry::require_order(int k, const char* what) const {
  if (order_ < k) {
    throw OrderExceededError(std::string(what) + " needs jet order >= " + std::to_string(k) +
                             ", geometry was built at order " + std::to_string(order_));
  }
}

const Jet& Geometry::f2() {
  if (!f2_) f2_ = m_.f_squared<Jet>(xj_, yj_);
  return *f2_;
}

const Jet& Geometry::f() {
  if (!f_) f_ = sqrt(f2());
  return *f_;
}

const Tensor<Jet>& Geometry::g() {
  if (!g_) {
    require_order(2, "fundamental tensor");
    Tensor<Jet> t(n_, 2);
    const Jet& q = f2();
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) {
        MultiIndex idx = MultiIndex::unit(n_ + i).plus(MultiIndex::unit(n_ + j));
        Jet gij = 0.5 * Jet(1.0) * q.derivative_jet(idx);
        t(i, j) = gij;
        if (i != j) t(j, i) = gij;
      }
    Tensor<double> vals(n_, 2);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) vals(i, j) = t(i, j).value();
    require_positive_definite(vals, m_, p_);
    g_ = std::move(t);
  }
  return *g_;
}

const Tensor<Jet>& Geometry::ginv() {
  if (!ginv_) ginv_ = invert_jet_matrix(g());
  return *ginv_;
}

const Tensor<Jet>& Geometry::cartan() {
  if (!A_) {
    require_order(3, "Cartan tensor");
    Tensor<Jet> t(n_, 3);
    const Tensor<Jet>& gt = g();
    const Jet& ff = f();
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j)
        for (int k = j; k < n_; ++k) {
          // A_ijk = (F/2) dg_ij/dy^k
          Jet a = 0.5 * ff * gt(i, j).derivative_jet(MultiIndex::unit(n_ + k));
          t(i, j, k) = a;
          t(i, k, j) = a;
          t(j, i, k) = a;
          t(j, k, i) = a;
          t(k, i, j) = a;
          t(k, j, i) = a;
        }
    A_ = std::move(t);
  }
  return *A_;
}

const Tensor<Jet>& Geometry::cartan_mixed() {
  if (!Amix_) {
    Tensor<Jet> t(n_, 3);
    const Tensor<Jet>& a = cartan();
    const Tensor<Jet>& gi = ginv();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = j; k < n_; ++k) {
          Jet s;
          for (int m = 0; m < n_; ++m) s += gi(i, m) * a(m, j, k);
          t(i, j, k) = s;
          t(i, k, j) = s;
        }
    Amix_ = std::move(t);
  }
  return *Amix_;
}

const Tensor<Jet>& Geometry::cnorm_mixed() {
  if (!Cmix_) {
    Tensor<Jet> t(n_, 3);
    const Tensor<Jet>& am = cartan_mixed();
    const Jet& ff = f();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) t(i, j, k) = am(i, j, k) / ff;
    Cmix_ = std::move(t);
  }
  return *Cmix_;
}

const Tensor<Jet>& Geometry::gamma() {
  if (!gamma_) {
    require_order(3, "formal Christoffel symbols");
    const Tensor<Jet>& gt = g();
    const Tensor<Jet>& gi = ginv();
    // dgx[k][i][j] = dg_ij/dx^k
    Tensor<Jet> dgx(n_, 3);
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
          Jet d = gt(i, j).derivative_jet(MultiIndex::unit(k));
          dgx(k, i, j) = d;
          dgx(k, j, i) = d;
        }
    Tensor<Jet> t(n_, 3);
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
          Jet s;
          for (int l = 0; l < n_; ++l) {
            s += gi(k, l) * (dgx(i, j, l) + dgx(j, i, l) - dgx(l, i, j));
          }
          s = 0.5 * s;
          t(k, i, j) = s;
          t(k, j, i) = s;
        }
    gamma_ = std::move(t);
  }
  return *gamma_;
}

const std::vector<Jet>& Geometry::spray() {
  if (!G_) {
    const Tensor<Jet>& ga = gamma();
    std::vector<Jet> g2(n_);
    for (int i = 0; i < n_; ++i) {
      Jet s;
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) s += ga(i, a, b) * yj_[a] * yj_[b];
      g2[i] = 0.5 * s;
    }
    G_ = std::move(g2);
  }
  return *G_;
}

const Tensor<Jet>& Geometry::nonlinear() {
  if (!N_) {
    const Tensor<Jet>& ga = gamma();
    const Tensor<Jet>& cm = cnorm_mixed();
    const std::vector<Jet>& gs = spray();
    Tensor<Jet> t(n_, 2);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        Jet s;
        for (int b = 0; b < n_; ++b) s += ga(i, j, b) * yj_[b];
        for (int l = 0; l < n_; ++l) s -= 2.0 * cm(i, j, l) * gs[l];
        t(i, j) = s;
      }
    N_ = std::move(t);
  }
  return *N_;
}

const Tensor<Jet>& Geometry::base() {
  if (!base_) {
    const Tensor<Jet>& gt = g();
    const Tensor<Jet>& gi = ginv();
    const Tensor<Jet>& nl = nonlinear();
    // delta g_ab / delta x^c
    Tensor<Jet> dg(n_, 3);  // (a, b, c)
    for (int a = 0; a < n_; ++a)
      for (int b = a; b < n_; ++b) {
        const Jet& q = gt(a, b);
        for (int c = 0; c < n_; ++c) {
          Jet d = q.derivative_jet(MultiIndex::unit(c));
          for (int mm = 0; mm < n_; ++mm) {
            d -= nl(mm, c) * q.derivative_jet(MultiIndex::unit(n_ + mm));
          }
          dg(a, b, c) = d;
          dg(b, a, c) = d;
        }
      }
    Tensor<Jet> t(n_, 3);  // (i up, j section, k direction)
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = j; k < n_; ++k) {
          Jet s;
          for (int m = 0; m < n_; ++m) {
            s += gi(i, m) * (dg(m, j, k) - dg(j, k, m) + dg(k, m, j));
          }
          s = 0.5 * s;
          t(i, j, k) = s;
          t(i, k, j) = s;
        }
    base_ = std::move(t);
  }
  return *base_;
}

namespace {

/// Flow derivative of a totally symmetric lowered rank-3 tensor given as jets:
/// (1/F)[y^s d_s T - 2 G^m dv_m T - N^m_i T_mjk - N^m_j T_imk - N^m_k T_ijm].
Tensor<Jet> flow_derivative(Geometry& geo, const Tensor<Jet>& t) {
  const int n = geo.n();
  const Tensor<Jet>& nl = geo.nonlinear();
  const std::vector<Jet>& gs = geo.spray();
  const std::vector<Jet>& y = geo.yj();
  Tensor<Jet> out(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        Jet s;
        for (int v = 0; v < n; ++v) {
          s += y[v] * t(i, j, k).derivative_jet(MultiIndex::unit(v));
          s -= 2.0 * gs[v] * t(i, j, k).derivative_jet(MultiIndex::unit(n + v));
        }
        for (int m = 0; m < n; ++m) {
          s -= nl(m, i) * t(m, j, k) + nl(m, j) * t(i, m, k) + nl(m, k) * t(i, j, m);
        }
        s = s / geo.f();
        out(i, j, k) = s;
        out(i, k, j) = s;
        out(j, i, k) = s;
        out(j, k, i) = s;
        out(k, i, j) = s;
        out(k, j, i) = s;
      }
  return out;
}

}  // namespace

const Tensor<Jet>& Geometry::adot() {
  if (!adot_) {
    require_order(4, "Landsberg tensor");
    adot_ = flow_derivative(*this, cartan());
  }
  return *adot_;
}

const Tensor<Jet>& Geometry::adot_mixed() {
  if (!adot_mixed_) {
    Tensor<Jet> t(n_, 3);
    const Tensor<Jet>& ad = adot();
    const Tensor<Jet>& gi = ginv();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = j; k < n_; ++k) {
          Jet s;
          for (int m = 0; m < n_; ++m) s += gi(i, m) * ad(m, j, k);
          t(i, j, k) = s;
          t(i, k, j) = s;
        }
    adot_mixed_ = std::move(t);
  }
  return *adot_mixed_;
}

const Tensor<double>& Geometry::addot_values() {
  if (!addot_) {
    require_order(5, "second flow derivative of the Cartan tensor");
    Tensor<Jet> jets = flow_derivative(*this, adot());
    addot_ = values_of(jets);
  }
  return *addot_;
}

Vec Geometry::ell_up() {
  Vec out(n_);
  const double fv = f().value();
  for (int i = 0; i < n_; ++i) out[i] = p_.y[i] / fv;
  return out;
}

Vec Geometry::ell_down() {
  Vec up = ell_up();
  Vec out(n_, 0.0);
  const Tensor<Jet>& gt = g();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += gt(i, j).value() * up[j];
  return out;
}

double Geometry::cond_g() {
  if (!cond_) {
    const Tensor<Jet>& gt = g();
    Tensor<double> vals(n_, 2);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) vals(i, j) = gt(i, j).value();
    Tensor<double> gi = invert_spd(vals);
    auto norm1 = [&](const Tensor<double>& t) {
      double best = 0.0;
      for (int j = 0; j < n_; ++j) {
        double col = 0.0;
        for (int i = 0; i < n_; ++i) col += std::abs(t(i, j));
        best = std::max(best, col);
      }
      return best;
    };
    cond_ = norm1(vals) * norm1(gi);
  }
  return *cond_;
}

double Geometry::delta_value(const Jet& q, int k) {
  const Tensor<Jet>& nl = nonlinear();
  double d = q.derivative_var(k);
  for (int m = 0; m < n_; ++m) d -= nl(m, k).value() * q.derivative_var(n_ + m);
  return d;
}

Jet Geometry::delta_jet(const Jet& q, int k) {
  const Tensor<Jet>& nl = nonlinear();
  Jet d = q.derivative_jet(MultiIndex::unit(k));
  for (int m = 0; m < n_; ++m) d -= nl(m, k) * q.derivative_jet(MultiIndex::unit(n_ + m));
  return d;
}

Tensor<double> Geometry::values_of(const Tensor<Jet>& t) const {
  Tensor<double> out(t.n(), t.rank());
  auto src = t.flat();
  auto dst = out.flat();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i].value();
  return out;
}

}  // namespace finsler
