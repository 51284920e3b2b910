#include "finsler/connection.hpp"

#include <cmath>

#include "finsler/geodesic.hpp"

namespace finsler {

ConnectionParams ConnectionParams::from_preset(std::string_view name) {
  ConnectionParams c;
  c.preset = std::string(name);
  if (name == "berwald") {
    c.kappa = {1.0, 1.0, 0.0, 0.0};
    c.r = 0.0;
  } else if (name == "chern") {
    c.kappa = {1.0, 0.0, 0.0, 0.0};
    c.r = 0.0;
  } else if (name == "cartan") {
    c.kappa = {1.0, 0.0, 0.0, 0.0};
    c.r = 1.0;
  } else if (name == "hashiguchi") {
    c.kappa = {1.0, 1.0, 0.0, 0.0};
    c.r = 1.0;
  } else if (name == "shen") {
    c.kappa = {0.0, 0.0, 0.0, 0.0};
    c.r = 0.0;
  } else {
    throw ConfigError("connection.preset", "unknown preset '" + std::string(name) + "'");
  }
  return c;
}

ConnectionParams ConnectionParams::general(std::array<double, 4> kappa, double r) {
  ConnectionParams c;
  c.kappa = kappa;
  c.r = r;
  return c;
}

std::string ConnectionParams::label() const {
  if (!preset.empty()) return preset;
  std::string s = "kappa=(";
  for (int q = 0; q < 4; ++q) s += (q ? "," : "") + std::to_string(kappa[q]);
  s += ") r=" + std::to_string(r);
  return s;
}

namespace detail {

int geometry_order_for(const ConnectionParams& c, int field_min_order) {
  int order = field_min_order;
  if (c.kappa[1] != 0.0) order = std::max(order, 4);
  return std::min(order, kMaxJetOrder);
}

Tensor<Jet> gammahat_jets(Geometry& geo, const ConnectionParams& c) {
  if (!c.within_jet_budget()) {
    throw OrderExceededError(
        "derivatives of coefficients with kappa_2 or kappa_3 active exceed the order-5 jet "
        "budget");
  }
  const int n = geo.n();
  Tensor<Jet> out = geo.base();
  const double k0 = c.kappa[0];
  if (k0 != 1.0) {
    const Tensor<Jet>& am = geo.cartan_mixed();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out(i, j, k) += (k0 - 1.0) * am(i, j, k);
  }
  if (c.kappa[1] != 0.0) {
    const Tensor<Jet>& adm = geo.adot_mixed();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out(i, j, k) += c.kappa[1] * adm(i, j, k);
  }
  return out;
}

Tensor<double> gammahat_values(const MetricInstance& m, const TangentPoint& p,
                               const ConnectionParams& c, Geometry& geo) {
  const int n = geo.n();
  if (c.within_jet_budget()) {
    return geo.values_of(gammahat_jets(geo, c));
  }
  Tensor<double> out = geo.values_of(geo.base());
  const Tensor<double> gi = geo.values_of(geo.ginv());
  auto add_mixed = [&](const Tensor<double>& low, double w) {
    if (w == 0.0) return;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double s = 0.0;
          for (int mm = 0; mm < n; ++mm) s += gi(i, mm) * low(mm, j, k);
          out(i, j, k) += w * s;
        }
  };
  add_mixed(geo.values_of(geo.cartan()), c.kappa[0] - 1.0);
  if (c.kappa[1] != 0.0) add_mixed(geo.values_of(geo.adot()), c.kappa[1]);
  if (c.kappa[2] != 0.0) add_mixed(iterated_cartan(m, p, 2).values, c.kappa[2]);
  if (c.kappa[3] != 0.0) add_mixed(iterated_cartan(m, p, 3).values, c.kappa[3]);
  return out;
}

}  // namespace detail

TensorBlock formal_christoffel(const MetricInstance& m, const TangentPoint& p) {
  Geometry geo(m, p, 3);
  TensorBlock out;
  out.values = geo.values_of(geo.gamma());
  out.symmetric_groups = {{1, 2}};
  out.homogeneity = 0;
  return out;
}

TensorBlock nonlinear_connection(const MetricInstance& m, const TangentPoint& p) {
  Geometry geo(m, p, 3);
  TensorBlock out;
  out.values = geo.values_of(geo.nonlinear());
  out.homogeneity = 1;
  return out;
}

Vec spray_coefficients(const MetricInstance& m, const TangentPoint& p) {
  Geometry geo(m, p, 3);
  const int n = geo.n();
  const Jet& f2 = geo.f2();
  const Tensor<Jet>& gi = geo.ginv();
  Vec out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    Jet s;
    for (int l = 0; l < n; ++l) {
      Jet bracket;
      for (int k = 0; k < n; ++k) {
        bracket += geo.yj()[k] *
                   f2.derivative_jet(MultiIndex::unit(k).plus(MultiIndex::unit(n + l)));
      }
      bracket -= f2.derivative_jet(MultiIndex::unit(l));
      s += gi(i, l) * bracket;
    }
    out[i] = 0.25 * s.value();
  }
  return out;
}

TensorBlock spray_connection_oracle(const MetricInstance& m, const TangentPoint& p) {
  Geometry geo(m, p, 3);
  const int n = geo.n();
  const Jet& f2 = geo.f2();
  const Tensor<Jet>& gi = geo.ginv();
  // G^i as jets, then one fiber derivative
  std::vector<Jet> G(n);
  for (int i = 0; i < n; ++i) {
    Jet s;
    for (int l = 0; l < n; ++l) {
      Jet bracket;
      for (int k = 0; k < n; ++k) {
        bracket += geo.yj()[k] *
                   f2.derivative_jet(MultiIndex::unit(k).plus(MultiIndex::unit(n + l)));
      }
      bracket -= f2.derivative_jet(MultiIndex::unit(l));
      s += gi(i, l) * bracket;
    }
    G[i] = 0.25 * s;
  }
  TensorBlock out;
  out.values = Tensor<double>(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.values(i, j) = G[i].derivative_var(n + j);
  out.homogeneity = 1;
  return out;
}

Vec delta_derivative(const MetricInstance& m, const TangentPoint& p, const ScalarField& field) {
  Geometry geo(m, p, 3);
  const int n = geo.n();
  // order-1 jets of the field in all 2n directions
  std::vector<Jet> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = Jet::variable(p.x[i], i, 1);
    ys[i] = Jet::variable(p.y[i], n + i, 1);
  }
  Jet fj = field.eval_jets(xs, ys);
  Vec out(n, 0.0);
  for (int k = 0; k < n; ++k) out[k] = geo.delta_value(fj, k);
  return out;
}

namespace {

/// Coordinate-frame horizontal coefficients: Gammahat + r N^s_k C^i_js.
Tensor<double> coord_gamma_values(Geometry& geo, const ConnectionParams& c,
                                  const Tensor<double>& gammahat) {
  const int n = geo.n();
  Tensor<double> out = gammahat;
  if (c.r != 0.0) {
    const Tensor<double> nl = geo.values_of(geo.nonlinear());
    const Tensor<double> cm = geo.values_of(geo.cnorm_mixed());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double s = 0.0;
          for (int m2 = 0; m2 < n; ++m2) s += nl(m2, k) * cm(i, j, m2);
          out(i, j, k) += c.r * s;
        }
  }
  return out;
}

}  // namespace

ConnectionCoefficients christoffel(const MetricInstance& m, const TangentPoint& p,
                                   const ConnectionParams& c) {
  Geometry geo(m, p, detail::geometry_order_for(c, 3));
  const int n = geo.n();
  const Tensor<double> gh = detail::gammahat_values(m, p, c, geo);
  const Tensor<double> coord = coord_gamma_values(geo, c, gh);

  ConnectionCoefficients out;
  out.N.values = geo.values_of(geo.nonlinear());
  out.N.homogeneity = 1;

  // public layout: Gamma(k, i, j) with direction i, section j
  out.Gamma.values = Tensor<double>(n, 3);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.Gamma.values(k, i, j) = coord(k, j, i);
  out.Gamma.homogeneity = 0;
  if (c.r == 0.0) out.Gamma.symmetric_groups = {{1, 2}};

  out.V.values = geo.values_of(geo.cnorm_mixed());
  for (double& v : out.V.values.flat()) v *= c.r;
  out.V.symmetric_groups = {{1, 2}};
  out.V.homogeneity = -1;
  return out;
}

TensorBlock vertical_coefficients(const MetricInstance& m, const TangentPoint& p,
                                  const ConnectionParams& c) {
  Geometry geo(m, p, 3);
  TensorBlock out;
  out.values = geo.values_of(geo.cnorm_mixed());
  for (double& v : out.values.flat()) v *= c.r;
  out.symmetric_groups = {{1, 2}};
  out.homogeneity = -1;
  return out;
}

double vertical_fixed_point_residual(const MetricInstance& m, const TangentPoint& p,
                                     const ConnectionParams& c) {
  Geometry geo(m, p, 3);
  const int n = geo.n();
  const Tensor<double> cm = geo.values_of(geo.cnorm_mixed());
  Tensor<double> v = cm;
  for (double& x : v.flat()) x *= c.r;
  double worst = 0.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double rhs = c.r * cm(k, i, j);
        for (int l = 0; l < n; ++l)
          for (int s = 0; s < n; ++s) rhs += p.y[l] * v(s, j, l) * cm(k, s, i);
        worst = std::max(worst, std::abs(v(k, i, j) - rhs));
      }
  return worst;
}

TensorBlock landsberg_analytic(const MetricInstance& m, const TangentPoint& p) {
  Geometry geo(m, p, 4);
  TensorBlock out;
  out.values = symmetrize3(geo.values_of(geo.adot()));
  out.symmetric_groups = {{0, 1, 2}};
  out.homogeneity = 0;
  return out;
}

TensorBlock landsberg_second_analytic(const MetricInstance& m, const TangentPoint& p) {
  Geometry geo(m, p, 5);
  TensorBlock out;
  out.values = symmetrize3(geo.addot_values());
  out.symmetric_groups = {{0, 1, 2}};
  out.homogeneity = 0;
  return out;
}

TensorBlock iterated_cartan(const MetricInstance& m, const TangentPoint& p, int q) {
  if (q < 0 || q > 3) {
    throw OrderExceededError("iterated Cartan tensor order must be 0..3, got " +
                             std::to_string(q));
  }
  if (q == 0) {
    Geometry geo(m, p, 3);
    TensorBlock out;
    out.values = symmetrize3(geo.values_of(geo.cartan()));
    out.symmetric_groups = {{0, 1, 2}};
    out.homogeneity = 0;
    return out;
  }
  if (q == 1) return landsberg_analytic(m, p);
  // transported Landsberg profile, Richardson-extrapolated time stencils
  const double h = 0.08;
  TensorBlock out;
  if (q == 2) {
    const std::vector<double> ts = {-h, -0.5 * h, 0.5 * h, h};
    auto nodes = landsberg_profile_at_nodes(m, p, ts);
    const int n = m.dim();
    Tensor<double> d(n, 3);
    auto fm = nodes[0].flat(), fmh = nodes[1].flat(), fph = nodes[2].flat(), fp = nodes[3].flat();
    auto fd = d.flat();
    for (std::size_t i = 0; i < fd.size(); ++i) {
      const double coarse = (fp[i] - fm[i]) / (2.0 * h);
      const double fine = (fph[i] - fmh[i]) / h;
      fd[i] = (4.0 * fine - coarse) / 3.0;
    }
    out.values = symmetrize3(d);
  } else {
    const std::vector<double> ts = {-h, -0.5 * h, 0.0, 0.5 * h, h};
    auto nodes = landsberg_profile_at_nodes(m, p, ts);
    const int n = m.dim();
    Tensor<double> d(n, 3);
    auto fm = nodes[0].flat(), fmh = nodes[1].flat(), f0 = nodes[2].flat(),
         fph = nodes[3].flat(), fp = nodes[4].flat();
    auto fd = d.flat();
    for (std::size_t i = 0; i < fd.size(); ++i) {
      const double coarse = (fp[i] - 2.0 * f0[i] + fm[i]) / (h * h);
      const double fine = (fph[i] - 2.0 * f0[i] + fmh[i]) / (0.25 * h * h);
      fd[i] = (4.0 * fine - coarse) / 3.0;
    }
    out.values = symmetrize3(d);
  }
  out.symmetric_groups = {{0, 1, 2}};
  out.homogeneity = 0;
  return out;
}

// --- covariant derivatives ----------------------------------------------------

JetTensorField metric_field() {
  JetTensorField f;
  f.name = "g";
  f.rank = 2;
  f.raised = {false, false};
  f.min_order = 3;
  f.eval = [](Geometry& geo) { return geo.g(); };
  return f;
}

JetTensorField cartan_field() {
  JetTensorField f;
  f.name = "A";
  f.rank = 3;
  f.raised = {false, false, false};
  f.min_order = 4;
  f.eval = [](Geometry& geo) { return geo.cartan(); };
  return f;
}

JetTensorField landsberg_field() {
  JetTensorField f;
  f.name = "Adot";
  f.rank = 3;
  f.raised = {false, false, false};
  f.min_order = 5;
  f.eval = [](Geometry& geo) { return geo.adot(); };
  return f;
}

JetTensorField cnorm_field() {
  JetTensorField f;
  f.name = "C";
  f.rank = 3;
  f.raised = {true, false, false};
  f.min_order = 4;
  f.eval = [](Geometry& geo) { return geo.cnorm_mixed(); };
  return f;
}

JetTensorField stilde_field(const ConnectionParams& c) {
  JetTensorField f;
  f.name = "Stilde";
  f.rank = 3;
  f.raised = {false, false, false};
  f.min_order = 5;
  const double k1 = c.kappa[1];
  f.eval = [k1](Geometry& geo) {
    Tensor<Jet> t = geo.adot();
    for (auto& j : t.flat()) j = k1 * j;
    return t;
  };
  return f;
}

namespace {

struct CovContext {
  Geometry* geo;
  int n;
  Tensor<Jet> field;
  std::vector<bool> raised;
  Tensor<double> gammahat;  // horizontal correction coefficients (values)
  Tensor<double> fvbar;     // F * V = r A^i_jk (values), vertical corrections
  double fval;
};

/// Applies per-slot connection corrections for the direction index k.
double corrections(const CovContext& ctx, const Tensor<double>& coeff,
                   const std::array<int, 3>& idx, int rank, int k) {
  double total = 0.0;
  for (int slot = 0; slot < rank; ++slot) {
    std::array<int, 3> probe = idx;
    const int a = idx[slot];
    double s = 0.0;
    for (int m2 = 0; m2 < ctx.n; ++m2) {
      probe[slot] = m2;
      double tv = rank == 2 ? ctx.field(probe[0], probe[1]).value()
                            : ctx.field(probe[0], probe[1], probe[2]).value();
      if (ctx.raised[slot]) {
        s += coeff(a, m2, k) * tv;  // + Gamma^a_{m k} T^{..m..}
      } else {
        s -= coeff(m2, a, k) * tv;  // - Gamma^m_{a k} T_{..m..}
      }
    }
    total += s;
  }
  return total;
}

CovContext make_context(const MetricInstance& m, const TangentPoint& p,
                        const ConnectionParams& c, const JetTensorField& field, Geometry& geo) {
  CovContext ctx{&geo, geo.n(), field.eval(geo), field.raised, Tensor<double>(), Tensor<double>(),
                 0.0};
  ctx.gammahat = detail::gammahat_values(m, p, c, geo);
  const int n = geo.n();
  ctx.fvbar = geo.values_of(geo.cartan_mixed());
  for (double& v : ctx.fvbar.flat()) v *= c.r;
  (void)n;
  ctx.fval = geo.f().value();
  return ctx;
}

}  // namespace

Tensor<double> h_cov_deriv(const MetricInstance& m, const TangentPoint& p,
                           const ConnectionParams& c, const JetTensorField& field) {
  Geometry geo(m, p, detail::geometry_order_for(c, field.min_order));
  CovContext ctx = make_context(m, p, c, field, geo);
  const int n = ctx.n;
  const int rank = field.rank;
  Tensor<double> out(n, rank + 1);
  std::array<int, 3> idx{0, 0, 0};
  auto emit = [&](int k) {
    const Jet& comp = rank == 2 ? ctx.field(idx[0], idx[1]) : ctx.field(idx[0], idx[1], idx[2]);
    double v = geo.delta_value(comp, k) + corrections(ctx, ctx.gammahat, idx, rank, k);
    if (rank == 2) {
      out(idx[0], idx[1], k) = v;
    } else {
      out(idx[0], idx[1], idx[2], k) = v;
    }
  };
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = 0; idx[1] < n; ++idx[1]) {
      if (rank == 2) {
        for (int k = 0; k < n; ++k) emit(k);
      } else {
        for (idx[2] = 0; idx[2] < n; ++idx[2])
          for (int k = 0; k < n; ++k) emit(k);
      }
    }
  return out;
}

Tensor<double> v_cov_deriv(const MetricInstance& m, const TangentPoint& p,
                           const ConnectionParams& c, const JetTensorField& field) {
  Geometry geo(m, p, detail::geometry_order_for(c, field.min_order));
  CovContext ctx = make_context(m, p, c, field, geo);
  const int n = ctx.n;
  const int rank = field.rank;
  Tensor<double> out(n, rank + 1);
  std::array<int, 3> idx{0, 0, 0};
  auto emit = [&](int k) {
    const Jet& comp = rank == 2 ? ctx.field(idx[0], idx[1]) : ctx.field(idx[0], idx[1], idx[2]);
    // F d/dy^k minus F V-corrections; F V = r A in mixed form
    double v = ctx.fval * comp.derivative_var(n + k) + corrections(ctx, ctx.fvbar, idx, rank, k);
    if (rank == 2) {
      out(idx[0], idx[1], k) = v;
    } else {
      out(idx[0], idx[1], idx[2], k) = v;
    }
  };
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = 0; idx[1] < n; ++idx[1]) {
      if (rank == 2) {
        for (int k = 0; k < n; ++k) emit(k);
      } else {
        for (idx[2] = 0; idx[2] < n; ++idx[2])
          for (int k = 0; k < n; ++k) emit(k);
      }
    }
  return out;
}

// --- identity evaluators --------------------------------------------------------

MetricDefect metric_compatibility_defect(const MetricInstance& m, const TangentPoint& p,
                                         const ConnectionParams& c) {
  MetricDefect out;
  out.horizontal = h_cov_deriv(m, p, c, metric_field());
  out.vertical = v_cov_deriv(m, p, c, metric_field());

  const int n = m.dim();
  Geometry geo(m, p, c.kappa[1] != 0.0 ? 4 : 3);
  const Tensor<double> A = geo.values_of(geo.cartan());
  Tensor<double> series(n, 3);
  auto add = [&](const Tensor<double>& t, double w) {
    if (w == 0.0) return;
    auto fs = series.flat();
    auto ft = t.flat();
    for (std::size_t i = 0; i < fs.size(); ++i) fs[i] += w * ft[i];
  };
  add(A, 2.0 * (1.0 - c.kappa[0]));
  if (c.kappa[1] != 0.0) add(geo.values_of(geo.adot()), -2.0 * c.kappa[1]);
  if (c.kappa[2] != 0.0) add(iterated_cartan(m, p, 2).values, -2.0 * c.kappa[2]);
  if (c.kappa[3] != 0.0) add(iterated_cartan(m, p, 3).values, -2.0 * c.kappa[3]);

  double hworst = 0.0, vworst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        hworst = std::max(hworst, std::abs(out.horizontal(i, j, k) - series(i, j, k)));
        vworst = std::max(vworst,
                          std::abs(out.vertical(i, j, k) - 2.0 * (1.0 - c.r) * A(i, j, k)));
      }
  out.h_series_residual = hworst;
  out.v_series_residual = vworst;
  return out;
}

EllResiduals cartan_ell_residuals(const MetricInstance& m, const TangentPoint& p,
                                  const ConnectionParams& c) {
  const int n = m.dim();
  Tensor<double> ah = h_cov_deriv(m, p, c, cartan_field());
  Tensor<double> av = v_cov_deriv(m, p, c, cartan_field());
  Geometry geo(m, p, 3);
  const Tensor<double> A = geo.values_of(geo.cartan());
  const Vec ell = geo.ell_up();
  EllResiduals out{0.0, 0.0};
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        double sh = 0.0, sv = 0.0;
        for (int i = 0; i < n; ++i) {
          sh += ell[i] * ah(i, j, k, l);
          sv += ell[i] * av(i, j, k, l);
        }
        out.horizontal = std::max(out.horizontal, std::abs(sh));
        out.vertical = std::max(out.vertical, std::abs(sv + A(j, k, l)));
      }
  return out;
}

double torsion_residual(const MetricInstance& m, const TangentPoint& p,
                        const ConnectionParams& c) {
  ConnectionCoefficients cc = christoffel(m, p, c);
  Geometry geo(m, p, 3);
  const int n = m.dim();
  const Tensor<double> nl = geo.values_of(geo.nonlinear());
  const Tensor<double> cm = geo.values_of(geo.cnorm_mixed());
  double worst = 0.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double rhs = 0.0;
        for (int s = 0; s < n; ++s) rhs += nl(s, i) * cm(k, s, j) - nl(s, j) * cm(k, s, i);
        const double lhs = cc.Gamma.values(k, i, j) - cc.Gamma.values(k, j, i);
        worst = std::max(worst, std::abs(lhs - c.r * rhs));
      }
  return worst;
}

Tensor<double> preset_christoffel_literal(const MetricInstance& m, const TangentPoint& p,
                                          std::string_view preset) {
  // hard-coded assemblies, one per named connection
  Geometry geo(m, p, (preset == "berwald" || preset == "hashiguchi") ? 4 : 3);
  const int n = geo.n();
  Tensor<double> out = geo.values_of(geo.base());
  auto add_lowered = [&](const Tensor<double>& low, double w) {
    const Tensor<double> gi = geo.values_of(geo.ginv());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double s = 0.0;
          for (int mm = 0; mm < n; ++mm) s += gi(i, mm) * low(mm, j, k);
          out(i, j, k) += w * s;
        }
  };
  auto add_nc = [&]() {
    const Tensor<double> nl = geo.values_of(geo.nonlinear());
    const Tensor<double> cm = geo.values_of(geo.cnorm_mixed());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double s = 0.0;
          for (int m2 = 0; m2 < n; ++m2) s += nl(m2, k) * cm(i, j, m2);
          out(i, j, k) += s;
        }
  };
  if (preset == "chern") {
    // base alone
  } else if (preset == "berwald") {
    add_lowered(geo.values_of(geo.adot()), 1.0);
  } else if (preset == "shen") {
    add_lowered(geo.values_of(geo.cartan()), -1.0);
  } else if (preset == "cartan") {
    add_nc();
  } else if (preset == "hashiguchi") {
    add_lowered(geo.values_of(geo.adot()), 1.0);
    add_nc();
  } else {
    throw ConfigError("connection.preset", "unknown preset '" + std::string(preset) + "'");
  }
  // public layout (k, direction, section)
  Tensor<double> pub(n, 3);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pub(k, i, j) = out(k, j, i);
  return pub;
}

Tensor<double> christoffel_difference(const MetricInstance& m, const TangentPoint& p,
                                      const ConnectionParams& a, const ConnectionParams& b) {
  ConnectionCoefficients ca = christoffel(m, p, a);
  ConnectionCoefficients cb = christoffel(m, p, b);
  return tensor_diff(ca.Gamma.values, cb.Gamma.values);
}

}  // namespace finsler
