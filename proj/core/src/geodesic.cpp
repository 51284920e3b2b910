#include "finsler/geodesic.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "finsler/geometry.hpp"

namespace finsler {

namespace {

struct State {
  Vec x, y;
  Mat e;  // e[a] = frame vector components
};

State axpy(const State& s, double h, const State& d) {
  State out = s;
  const int n = static_cast<int>(s.x.size());
  for (int i = 0; i < n; ++i) {
    out.x[i] += h * d.x[i];
    out.y[i] += h * d.y[i];
  }
  for (std::size_t a = 0; a < s.e.size(); ++a)
    for (int i = 0; i < n; ++i) out.e[a][i] += h * d.e[a][i];
  return out;
}

/// Geodesic + transport right-hand side; throws DomainError off chart.
State rhs(const MetricInstance& m, const State& s) {
  const int n = static_cast<int>(s.x.size());
  TangentPoint p{s.x, s.y};
  Geometry geo(m, p, 3);
  const Tensor<Jet>& nl = geo.nonlinear();
  State d;
  d.x = s.y;
  d.y.assign(n, 0.0);
  // 2G^i = N^i_j y^j
  for (int i = 0; i < n; ++i) {
    double twog = 0.0;
    for (int j = 0; j < n; ++j) twog += nl(i, j).value() * s.y[j];
    d.y[i] = -twog;
  }
  d.e.assign(s.e.size(), Vec(n, 0.0));
  for (std::size_t a = 0; a < s.e.size(); ++a)
    for (int i = 0; i < n; ++i) {
      double v = 0.0;
      for (int j = 0; j < n; ++j) v -= nl(i, j).value() * s.e[a][j];
      d.e[a][i] = v;
    }
  return d;
}

State rk4_step(const MetricInstance& m, const State& s, double h) {
  State k1 = rhs(m, s);
  State k2 = rhs(m, axpy(s, 0.5 * h, k1));
  State k3 = rhs(m, axpy(s, 0.5 * h, k2));
  State k4 = rhs(m, axpy(s, h, k3));
  State out = s;
  const int n = static_cast<int>(s.x.size());
  for (int i = 0; i < n; ++i) {
    out.x[i] += h / 6.0 * (k1.x[i] + 2.0 * k2.x[i] + 2.0 * k3.x[i] + k4.x[i]);
    out.y[i] += h / 6.0 * (k1.y[i] + 2.0 * k2.y[i] + 2.0 * k3.y[i] + k4.y[i]);
  }
  for (std::size_t a = 0; a < s.e.size(); ++a)
    for (int i = 0; i < n; ++i) {
      out.e[a][i] +=
          h / 6.0 * (k1.e[a][i] + 2.0 * k2.e[a][i] + 2.0 * k3.e[a][i] + k4.e[a][i]);
    }
  return out;
}

Mat default_frame(const MetricInstance& m, const TangentPoint& p) {
  const int n = m.dim();
  Geometry geo(m, p, 2);
  Tensor<double> g = geo.values_of(geo.g());
  auto inner = [&](const Vec& u, const Vec& v) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += g(i, j) * u[i] * v[j];
    return s;
  };
  // Gram-Schmidt against ell, unit direction stored last
  Vec ell = geo.ell_up();
  Mat frame;
  for (int a = 0; a < n && static_cast<int>(frame.size()) < n - 1; ++a) {
    Vec v(n, 0.0);
    v[a] = 1.0;
    double c = inner(v, ell);
    for (int i = 0; i < n; ++i) v[i] -= c * ell[i];
    for (const Vec& w : frame) {
      double cw = inner(v, w);
      for (int i = 0; i < n; ++i) v[i] -= cw * w[i];
    }
    double nv = std::sqrt(inner(v, v));
    if (nv < 1e-10) continue;
    for (int i = 0; i < n; ++i) v[i] /= nv;
    frame.push_back(v);
  }
  frame.push_back(ell);
  return frame;
}

}  // namespace

GeodesicTrace integrate_geodesic(const MetricInstance& m, Vec x0, Vec y0, double t0, double t1,
                                 int steps, const std::optional<Mat>& frame0) {
  if (steps < 8) {
    throw DomainError("geodesic integration needs at least 8 steps, got " +
                      std::to_string(steps));
  }
  TangentPoint p{x0, y0};
  m.require_admissible(p);
  const double f = m.eval_f(p);
  for (double& v : y0) v /= f;  // unit speed

  GeodesicTrace trace{m, {}, {}, {}, {}, false};
  State s{x0, y0, frame0 ? *frame0 : default_frame(m, {x0, y0})};
  const double h = (t1 - t0) / steps;
  trace.times.push_back(t0);
  trace.xs.push_back(s.x);
  trace.ys.push_back(s.y);
  trace.frames.push_back(s.e);
  for (int k = 0; k < steps; ++k) {
    State next;
    try {
      next = rk4_step(m, s, h);
      if (!m.admissible({next.x, next.y})) {
        trace.truncated = true;
        break;
      }
    } catch (const DomainError&) {
      trace.truncated = true;
      break;
    }
    s = next;
    trace.times.push_back(t0 + (k + 1) * h);
    trace.xs.push_back(s.x);
    trace.ys.push_back(s.y);
    trace.frames.push_back(s.e);
  }
  return trace;
}

double unit_speed_drift(const GeodesicTrace& trace) {
  double worst = 0.0;
  for (std::size_t s = 0; s < trace.times.size(); ++s) {
    const double f = trace.metric.eval_f({trace.xs[s], trace.ys[s]});
    worst = std::max(worst, std::abs(f - 1.0));
  }
  return worst;
}

double frame_gram_drift(const GeodesicTrace& trace) {
  const int n = trace.metric.dim();
  const int nf = static_cast<int>(trace.frames.front().size());
  std::vector<double> g0;
  double worst = 0.0;
  for (std::size_t s = 0; s < trace.times.size(); ++s) {
    Geometry geo(trace.metric, {trace.xs[s], trace.ys[s]}, 2);
    Tensor<double> g = geo.values_of(geo.g());
    for (int a = 0; a < nf; ++a)
      for (int b = a; b < nf; ++b) {
        double v = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) v += g(i, j) * trace.frames[s][a][i] * trace.frames[s][b][j];
        if (s == 0) {
          g0.push_back(v);
        } else {
          const std::size_t idx = static_cast<std::size_t>(a * nf + b - a * (a + 1) / 2);
          worst = std::max(worst, std::abs(v - g0[idx]));
        }
      }
  }
  return worst;
}

CartanProfile profile_cartan(const GeodesicTrace& trace, const Vec& X, const Vec& Y,
                             const Vec& Z) {
  const int n = trace.metric.dim();
  const int nf = static_cast<int>(trace.frames.front().size());
  // coefficients of X, Y, Z in the initial frame; transport is linear
  auto solve_coeffs = [&](const Vec& v) {
    // frame vectors as columns
    Tensor<double> a(n, 2);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < nf; ++c) a(i, c) = trace.frames.front()[c][i];
    // Gaussian elimination
    Vec b = v;
    std::vector<Vec> rows(n, Vec(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) rows[i][j] = a(i, j);
      rows[i][n] = b[i];
    }
    for (int c = 0; c < n; ++c) {
      int piv = c;
      for (int r2 = c + 1; r2 < n; ++r2)
        if (std::abs(rows[r2][c]) > std::abs(rows[piv][c])) piv = r2;
      std::swap(rows[piv], rows[c]);
      for (int r2 = 0; r2 < n; ++r2) {
        if (r2 == c) continue;
        const double f = rows[r2][c] / rows[c][c];
        for (int j = c; j <= n; ++j) rows[r2][j] -= f * rows[c][j];
      }
    }
    Vec out(n);
    for (int c = 0; c < n; ++c) out[c] = rows[c][n] / rows[c][c];
    return out;
  };
  const Vec cx = solve_coeffs(X), cy = solve_coeffs(Y), cz = solve_coeffs(Z);

  CartanProfile prof;
  for (std::size_t s = 0; s < trace.times.size(); ++s) {
    Vec xt(n, 0.0), yt(n, 0.0), zt(n, 0.0);
    for (int c = 0; c < nf; ++c)
      for (int i = 0; i < n; ++i) {
        xt[i] += cx[c] * trace.frames[s][c][i];
        yt[i] += cy[c] * trace.frames[s][c][i];
        zt[i] += cz[c] * trace.frames[s][c][i];
      }
    Geometry geo(trace.metric, {trace.xs[s], trace.ys[s]}, 5);
    const Tensor<double> A = geo.values_of(geo.cartan());
    const Tensor<double> Ad = geo.values_of(geo.adot());
    const Tensor<double>& Add = geo.addot_values();
    double a = 0.0, ad = 0.0, add = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const double w = xt[i] * yt[j] * zt[k];
          a += A(i, j, k) * w;
          ad += Ad(i, j, k) * w;
          add += Add(i, j, k) * w;
        }
    prof.t.push_back(trace.times[s]);
    prof.A.push_back(a);
    prof.Adot.push_back(ad);
    prof.Addot.push_back(add);
  }
  return prof;
}

namespace {

double stencil_derivative(const std::vector<double>& t, const std::vector<double>& f,
                          std::size_t i) {
  const double h = t[1] - t[0];
  const std::size_t K = f.size();
  if (i >= 2 && i + 2 < K) {
    return (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
  }
  if (i == 0) {
    return (-11.0 * f[0] + 18.0 * f[1] - 9.0 * f[2] + 2.0 * f[3]) / (6.0 * h);
  }
  if (i == 1) {
    return (-2.0 * f[0] - 3.0 * f[1] + 6.0 * f[2] - f[3]) / (6.0 * h);
  }
  if (i == K - 1) {
    return (11.0 * f[K - 1] - 18.0 * f[K - 2] + 9.0 * f[K - 3] - 2.0 * f[K - 4]) / (6.0 * h);
  }
  // i == K - 2
  return (2.0 * f[K - 1] + 3.0 * f[K - 2] - 6.0 * f[K - 3] + f[K - 4]) / (6.0 * h);
}

}  // namespace

double profile_flow_residual(const CartanProfile& p) {
  double worst = 0.0;
  for (std::size_t i = 0; i < p.t.size(); ++i) {
    worst = std::max(worst, std::abs(stencil_derivative(p.t, p.Adot, i) - p.Addot[i]));
  }
  return worst;
}

double fit_lambda(const CartanProfile& p) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    num += p.Addot[i] * p.A[i];
    den += p.A[i] * p.A[i];
  }
  if (den == 0.0) return 0.0;
  return -num / den;
}

FitForm fit_form_from_string(std::string_view s) {
  if (s == "sinh_cosh") return FitForm::sinh_cosh;
  if (s == "exponential") return FitForm::exponential;
  if (s == "three_term") return FitForm::three_term;
  throw ConfigError("geodesic.fit.form", "unknown fit form '" + std::string(s) + "'");
}

FitResult fit_solution_form(std::span<const double> t, std::span<const double> values,
                            FitForm form, double param) {
  std::vector<std::vector<double>> basis;
  switch (form) {
    case FitForm::sinh_cosh: {
      if (!(param > 0.0)) throw ConfigError("geodesic.fit.param", "sinh_cosh needs k > 0");
      const double rk = std::sqrt(param);
      basis.resize(2);
      for (double ti : t) {
        basis[0].push_back(std::sinh(rk * ti));
        basis[1].push_back(std::cosh(rk * ti));
      }
      break;
    }
    case FitForm::exponential: {
      basis.resize(1);
      for (double ti : t) basis[0].push_back(std::exp(param * ti));
      break;
    }
    case FitForm::three_term: {
      if (!(param < 0.0)) throw ConfigError("geodesic.fit.param", "three_term needs lambda < 0");
      const double rk = std::sqrt(-param);
      basis.resize(3);
      for (double ti : t) {
        basis[0].push_back(1.0);
        basis[1].push_back(std::exp(rk * ti));
        basis[2].push_back(std::exp(-rk * ti));
      }
      break;
    }
  }
  const std::size_t m = basis.size();
  const std::size_t npts = t.size();
  if (npts < 3 * m) {
    throw DomainError("profile too short for the requested fit: need at least " +
                      std::to_string(3 * m) + " samples");
  }
  // normal equations, tiny m
  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < npts; ++k) s += basis[i][k] * basis[j][k];
      a[i][j] = s;
    }
    double s = 0.0;
    for (std::size_t k = 0; k < npts; ++k) s += basis[i][k] * values[k];
    a[i][m] = s;
  }
  // conditioning guard on the Gram matrix diagonal after elimination
  double max_pivot = 0.0, min_pivot = 1e300;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t r2 = c + 1; r2 < m; ++r2)
      if (std::abs(a[r2][c]) > std::abs(a[piv][c])) piv = r2;
    std::swap(a[piv], a[c]);
    const double pv = std::abs(a[c][c]);
    max_pivot = std::max(max_pivot, pv);
    min_pivot = std::min(min_pivot, pv);
    if (pv == 0.0 || max_pivot / pv > 1e12) {
      throw FitConditioningError("near-degenerate fit basis for the requested form");
    }
    for (std::size_t r2 = 0; r2 < m; ++r2) {
      if (r2 == c) continue;
      const double f = a[r2][c] / a[c][c];
      for (std::size_t j = c; j <= m; ++j) a[r2][j] -= f * a[c][j];
    }
  }
  FitResult out;
  out.coeffs.resize(m);
  for (std::size_t c = 0; c < m; ++c) out.coeffs[c] = a[c][m] / a[c][c];
  for (std::size_t k = 0; k < npts; ++k) {
    double fit = 0.0;
    for (std::size_t c = 0; c < m; ++c) fit += out.coeffs[c] * basis[c][k];
    out.residual = std::max(out.residual, std::abs(fit - values[k]));
  }
  return out;
}

std::vector<Tensor<double>> landsberg_profile_at_nodes(const MetricInstance& m,
                                                       const TangentPoint& p,
                                                       std::span<const double> ts) {
  const int n = m.dim();
  const double f = m.eval_f(p);
  Vec y0 = p.y;
  for (double& v : y0) v /= f;

  Mat identity(n, Vec(n, 0.0));
  for (int i = 0; i < n; ++i) identity[i][i] = 1.0;

  std::vector<Tensor<double>> out;
  for (double tnode : ts) {
    State s{p.x, y0, identity};
    if (tnode != 0.0) {
      const int steps = std::max(8, static_cast<int>(std::ceil(std::abs(tnode) / 0.01)));
      const double h = tnode / steps;
      for (int k = 0; k < steps; ++k) {
        try {
          s = rk4_step(m, s, h);
        } catch (const DomainError&) {
          throw ChartExitError("geodesic left the chart before the time stencil at t = " +
                               std::to_string(tnode) + " was covered");
        }
      }
      if (!m.admissible({s.x, s.y})) {
        throw ChartExitError("geodesic left the chart before the time stencil at t = " +
                             std::to_string(tnode) + " was covered");
      }
    }
    Geometry geo(m, {s.x, s.y}, 4);
    const Tensor<double> ad = geo.values_of(geo.adot());
    Tensor<double> contracted(n, 3);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          double v = 0.0;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              for (int k = 0; k < n; ++k) {
                v += ad(i, j, k) * s.e[a][i] * s.e[b][j] * s.e[c][k];
              }
          contracted(a, b, c) = v;
        }
    out.push_back(std::move(contracted));
  }
  return out;
}

std::string trace_csv(const GeodesicTrace& trace, const CartanProfile& profile) {
  const int n = trace.metric.dim();
  std::ostringstream os;
  os << "t";
  for (int i = 1; i <= n; ++i) os << ",x" << i;
  for (int i = 1; i <= n; ++i) os << ",y" << i;
  os << ",A,Adot,Addot\n";
  char buf[64];
  auto emit = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
  };
  for (std::size_t s = 0; s < trace.times.size(); ++s) {
    emit(trace.times[s]);
    for (int i = 0; i < n; ++i) {
      os << ",";
      emit(trace.xs[s][i]);
    }
    for (int i = 0; i < n; ++i) {
      os << ",";
      emit(trace.ys[s][i]);
    }
    os << ",";
    emit(profile.A[s]);
    os << ",";
    emit(profile.Adot[s]);
    os << ",";
    emit(profile.Addot[s]);
    os << "\n";
  }
  return os.str();
}

}  // namespace finsler
