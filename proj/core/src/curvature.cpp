#include "finsler/curvature.hpp"

#include <cmath>

namespace finsler {

namespace {

Tensor<double> lower_second(Geometry& geo, const Tensor<double>& mixed) {
  const int n = geo.n();
  const Tensor<double> g = geo.values_of(geo.g());
  Tensor<double> out(n, 4);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int m2 = 0; m2 < n; ++m2) s += g(m2, j) * mixed(m2, i, k, l);
          out(i, j, k, l) = s;
        }
  return out;
}

}  // namespace

double CurvatureBundle::antisymmetry_residual_R() const {
  const int n = R.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          worst = std::max(worst, std::abs(R(i, j, k, l) + R(i, j, l, k)));
  return worst;
}

double CurvatureBundle::antisymmetry_residual_Q() const {
  const int n = Q.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          worst = std::max(worst, std::abs(Q(i, j, k, l) + Q(i, j, l, k)));
  return worst;
}

CurvatureBundle curvature(const MetricInstance& m, const TangentPoint& p,
                          const ConnectionParams& c) {
  if (!c.within_jet_budget()) {
    throw OrderExceededError(
        "curvature with kappa_2 or kappa_3 active needs derivatives of the second iterated "
        "tensor and exceeds the order-5 jet budget");
  }
  const int order = (c.kappa[1] != 0.0) ? 5 : 4;
  Geometry geo(m, p, order);
  const int n = geo.n();

  Tensor<Jet> gammahat = detail::gammahat_jets(geo, c);
  const Tensor<Jet>& nl = geo.nonlinear();
  const Tensor<Jet>& am = geo.cartan_mixed();
  const Tensor<Jet>& cm = geo.cnorm_mixed();
  const Jet& fj = geo.f();
  const double fval = fj.value();
  const double r = c.r;

  // value tables
  Tensor<double> gh(n, 3), nv(n, 2), amv(n, 3), cmv(n, 3);
  gh = geo.values_of(gammahat);
  nv = geo.values_of(nl);
  amv = geo.values_of(am);
  cmv = geo.values_of(cm);

  // delta-derivatives of the coefficient tables
  Tensor<double> dgh(n, 4);  // (i, j, k; direction d): delta_d gammahat^i_jk
  Tensor<double> ygh(n, 4);  // fiber derivative d gammahat / dy^d
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Jet& q = gammahat(i, j, k);
        for (int d = 0; d < n; ++d) {
          dgh(i, j, k, d) = geo.delta_value(q, d);
          ygh(i, j, k, d) = q.derivative_var(n + d);
        }
      }
  Tensor<double> dn(n, 3), yn(n, 3);  // delta_d N^i_j and dN^i_j/dy^d
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Jet& q = nl(i, j);
      for (int d = 0; d < n; ++d) {
        dn(i, j, d) = geo.delta_value(q, d);
        yn(i, j, d) = q.derivative_var(n + d);
      }
    }
  Vec df(n, 0.0);  // delta_d F (vanishes analytically; kept exact)
  for (int d = 0; d < n; ++d) df[d] = geo.delta_value(fj, d);

  CurvatureBundle out;
  out.at = p;
  out.params = c;
  out.R = Tensor<double>(n, 4);
  out.P = Tensor<double>(n, 4);
  out.Q = Tensor<double>(n, 4);

  // hh block
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = dgh(i, j, l, k) - dgh(i, j, k, l);
          for (int m2 = 0; m2 < n; ++m2) {
            v += gh(m2, j, l) * gh(i, m2, k) - gh(m2, j, k) * gh(i, m2, l);
          }
          if (r != 0.0) {
            for (int m2 = 0; m2 < n; ++m2) {
              const double bracket = dn(m2, l, k) - dn(m2, k, l);
              v += bracket * r * cmv(i, j, m2);
            }
          }
          out.R(i, j, k, l) = v;
        }

  // hv block
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = -fval * ygh(i, j, k, l);
          if (r != 0.0) {
            // delta_k of (r A^i_jl)
            v += r * geo.delta_value(am(i, j, l), k);
            for (int m2 = 0; m2 < n; ++m2) {
              v += r * amv(m2, j, l) * gh(i, m2, k);
              v -= r * gh(m2, j, k) * amv(i, m2, l);
              v -= fval * yn(m2, k, l) * r * cmv(i, j, m2);
            }
            v -= df[k] * r * cmv(i, j, l);
          }
          out.P(i, j, k, l) = v;
        }

  // vv block
  if (r != 0.0) {
    Tensor<double> ycm(n, 4);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Jet& q = cm(i, j, k);
          for (int d = 0; d < n; ++d) ycm(i, j, k, d) = q.derivative_var(n + d);
        }
    const double f2 = fval * fval;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double v = f2 * r * (ycm(i, j, l, k) - ycm(i, j, k, l));
            for (int m2 = 0; m2 < n; ++m2) {
              v += f2 * r * r *
                   (cmv(m2, j, l) * cmv(i, m2, k) - cmv(m2, j, k) * cmv(i, m2, l));
            }
            out.Q(i, j, k, l) = v;
          }
  } else {
    out.Q = Tensor<double>(n, 4);
  }

  out.R_low = lower_second(geo, out.R);
  out.P_low = lower_second(geo, out.P);
  out.Q_low = lower_second(geo, out.Q);
  return out;
}

Tensor<double> reduced_hv(const MetricInstance& m, const TangentPoint& p,
                          const ConnectionParams& c) {
  CurvatureBundle b = curvature(m, p, c);
  Geometry geo(m, p, 2);
  const Vec ell = geo.ell_up();
  const int n = m.dim();
  Tensor<double> out(n, 3);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += ell[i] * b.P_low(i, j, k, l);
        out(j, k, l) = s;
      }
  return out;
}

double reduced_hv_form_residual(const MetricInstance& m, const TangentPoint& p,
                                const ConnectionParams& c) {
  Tensor<double> red = reduced_hv(m, p, c);
  Geometry geo(m, p, 4);
  const Tensor<double> ad = geo.values_of(geo.adot());
  const int n = m.dim();
  double worst = 0.0;
  const double w = c.kappa[1] - 1.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        worst = std::max(worst, std::abs(red(j, k, l) - w * ad(j, k, l)));
      }
  return worst;
}

double flag_curvature(const MetricInstance& m, const TangentPoint& p, const Vec& edge) {
  CurvatureBundle b = curvature(m, p, ConnectionParams::from_preset("berwald"));
  Geometry geo(m, p, 2);
  const Tensor<double> g = geo.values_of(geo.g());
  const int n = m.dim();
  auto inner = [&](const Vec& u, const Vec& v) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += g(i, j) * u[i] * v[j];
    return s;
  };
  const double gyy = inner(p.y, p.y);
  const double gvv = inner(edge, edge);
  const double gyv = inner(p.y, edge);
  const double denom = gyy * gvv - gyv * gyv;
  if (!(denom > 1e-8)) {
    throw DegenerateFlagError("flag denominator " + std::to_string(denom) +
                              " below tolerance; edge nearly parallel to y");
  }
  // V^i (y^j R_jikl y^l) V^k with R_jikl = g_si R^s_jkl
  double num = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          num += edge[i] * p.y[j] * b.R_low(j, i, k, l) * p.y[l] * edge[k];
        }
  return num / denom;
}

Lemma1Residuals lemma1_residuals(const MetricInstance& m, const TangentPoint& p,
                                 const ConnectionParams& c) {
  if (c.kappa[0] != 1.0 || c.r != 1.0) {
    throw DomainError("slot-exchange identities hold for metric-torsion parameters "
                      "(kappa_0 = 1, r = 1); got " + c.label());
  }
  CurvatureBundle b = curvature(m, p, c);
  const int n = m.dim();
  Geometry geo(m, p, 4);
  const Tensor<double> g = geo.values_of(geo.g());
  const Tensor<double> cmv = geo.values_of(geo.cnorm_mixed());
  const Vec ell = geo.ell_up();

  Tensor<double> ch = h_cov_deriv(m, p, c, cnorm_field());
  Tensor<double> cv = v_cov_deriv(m, p, c, cnorm_field());

  // section-contracted blocks X^i_(n)kl = ell^j X^i_jkl
  Tensor<double> Rn(n, 3), Pn(n, 3), Qn(n, 3), QnT(n, 3);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        double rn = 0.0, pn = 0.0, qn = 0.0, qnt = 0.0;
        for (int j = 0; j < n; ++j) {
          rn += ell[j] * b.R(i, j, k, l);
          pn += ell[j] * b.P(i, j, k, l);
          qn += ell[j] * b.Q(i, j, k, l);
          qnt += ell[j] * b.Q(i, j, l, k);
        }
        Rn(i, k, l) = rn;
        Pn(i, k, l) = pn;
        Qn(i, k, l) = qn;
        QnT(i, k, l) = qnt;
      }

  auto lowered_max = [&](const Tensor<double>& t4) {
    // lower the output slot with g, then take the max norm
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double s = 0.0;
            for (int m2 = 0; m2 < n; ++m2) s += g(i, m2) * t4(m2, j, k, l);
            worst = std::max(worst, std::abs(s));
          }
    return worst;
  };

  Tensor<double> t1(n, 4), t2(n, 4), t3(n, 4);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v1 = b.R(i, j, k, l) + b.R(i, k, l, j) + b.R(i, l, j, k);
          double v2 = b.P(i, j, k, l) - b.P(i, k, j, l);
          double v3 = b.Q(i, j, k, l) - b.Q(i, j, l, k);
          for (int m2 = 0; m2 < n; ++m2) {
            v1 -= cmv(i, j, m2) * Rn(m2, k, l) + cmv(i, k, m2) * Rn(m2, l, j) +
                  cmv(i, l, m2) * Rn(m2, j, k);
            v2 -= cmv(i, j, m2) * Pn(m2, k, l) - cmv(i, k, m2) * Pn(m2, j, l);
            v3 -= 2.0 * (cmv(i, m2, k) * cmv(m2, j, l) - cmv(i, m2, l) * cmv(m2, j, k));
            v3 -= cmv(i, j, m2) * (Qn(m2, k, l) - QnT(m2, k, l));
          }
          v2 -= ch(i, k, l, j) - ch(i, j, l, k);
          v3 -= 2.0 * (cv(i, j, k, l) - cv(i, j, l, k));
          t1(i, j, k, l) = v1;
          t2(i, j, k, l) = v2;
          t3(i, j, k, l) = v3;
        }
  return Lemma1Residuals{lowered_max(t1), lowered_max(t2), lowered_max(t3)};
}

PairSymmetryResiduals symmetry_residuals(const MetricInstance& m, const TangentPoint& p,
                                         const ConnectionParams& c) {
  CurvatureBundle b = curvature(m, p, c);
  const int n = m.dim();
  Geometry geo(m, p, 4);
  const Tensor<double> cmv = geo.values_of(geo.cnorm_mixed());

  PairSymmetryResiduals out{0.0, 0.0, 0.0};
  const bool has_series = c.kappa[1] != 0.0;
  Tensor<double> sh(n, 4), sv(n, 4);
  Tensor<double> stv(n, 3);
  if (has_series) {
    sh = h_cov_deriv(m, p, c, stilde_field(c));
    sv = v_cov_deriv(m, p, c, stilde_field(c));
    Geometry geo5(m, p, 5);
    Tensor<double> ad = geo5.values_of(geo5.adot());
    stv = Tensor<double>(n, 3);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) stv(i, j, k) = c.kappa[1] * ad(i, j, k);
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double hh = b.R_low(i, j, k, l) + b.R_low(j, i, k, l);
          double hv = b.P_low(i, j, k, l) + b.P_low(j, i, k, l);
          const double vv = b.Q_low(i, j, k, l) + b.Q_low(j, i, k, l);
          if (has_series) {
            hh -= 2.0 * (sh(i, j, l, k) - sh(i, j, k, l));
            double corr = sv(i, j, k, l);
            for (int u = 0; u < n; ++u) corr -= cmv(u, k, l) * stv(u, i, j);
            hv += 2.0 * corr;
          }
          out.hh = std::max(out.hh, std::abs(hh));
          out.hv = std::max(out.hv, std::abs(hv));
          out.vv = std::max(out.vv, std::abs(vv));
        }
  return out;
}

}  // namespace finsler
