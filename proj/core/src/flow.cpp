#include "nahm/flow.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "nahm/structure.hpp"

namespace nahm {

namespace {

// Dormand-Prince 5(4) pair.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640, E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;

using DVec = std::vector<double>;

DVec axpy(const DVec& y, double h, const DVec& k) {
  DVec r = y;
  for (size_t i = 0; i < r.size(); ++i) r[i] += h * k[i];
  return r;
}

std::vector<DVec> orthonormal_basis(const Subspace& s) {
  const int d = s.ambient();
  std::vector<DVec> q;
  for (int r = 0; r < s.dim(); ++r) {
    DVec u(d);
    for (int j = 0; j < d; ++j) u[j] = s.basis().at(r, j).to_double();
    for (const auto& e : q) {
      double dot = 0;
      for (int j = 0; j < d; ++j) dot += u[j] * e[j];
      for (int j = 0; j < d; ++j) u[j] -= dot * e[j];
    }
    double nrm = 0;
    for (double x : u) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm > 1e-14) {
      for (auto& x : u) x /= nrm;
      q.push_back(std::move(u));
    }
  }
  return q;
}

double residual_off(const std::vector<DVec>& q, DVec v) {
  for (const auto& e : q) {
    double dot = 0;
    for (size_t j = 0; j < v.size(); ++j) dot += v[j] * e[j];
    for (size_t j = 0; j < v.size(); ++j) v[j] -= dot * e[j];
  }
  return inf_norm(v);
}

/// Least-squares line through (t_i, 1/||X_i||); the blow-up time is its root,
/// matching the c/(t*-t) ray asymptotics.
double estimate_blow_up(const std::vector<double>& times,
                        const std::vector<std::vector<double>>& states) {
  const int m = static_cast<int>(times.size());
  const int k = std::min(5, m);
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (int i = m - k; i < m; ++i) {
    const double y = 1.0 / std::max(inf_norm(states[i]), 1e-300);
    st += times[i];
    sy += y;
    stt += times[i] * times[i];
    sty += times[i] * y;
  }
  const double denom = k * stt - st * st;
  if (std::abs(denom) < 1e-300) return times.back();
  const double beta = (k * sty - st * sy) / denom;
  const double alpha = (sy - beta * st) / k;
  if (beta >= 0) return times.back();
  return -alpha / beta;
}

}  // namespace

std::string to_string(FlowStatus s) {
  switch (s) {
    case FlowStatus::completed: return "completed";
    case FlowStatus::blow_up: return "blow_up";
    case FlowStatus::equilibrium: return "equilibrium";
    case FlowStatus::step_underflow: return "step_underflow";
  }
  return "unknown";
}

std::vector<double> Trajectory::sample(double t) const {
  if (times.empty()) throw std::out_of_range("Trajectory::sample: empty trajectory");
  const double slack = 1e-12 * std::max(1.0, std::abs(t_back()));
  if (t < times.front() - slack || t > times.back() + slack)
    throw std::out_of_range("Trajectory::sample: time outside the integrated range");
  if (times.size() == 1) return states[0];
  t = std::clamp(t, times.front(), times.back());
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  size_t k = (it == times.begin()) ? 0 : (it - times.begin() - 1);
  if (k + 1 >= times.size()) k = times.size() - 2;
  const double t0 = times[k], t1 = times[k + 1], h = t1 - t0;
  const double s = (t - t0) / h;
  const DVec& y0 = states[k];
  const DVec& y1 = states[k + 1];
  // Quartic Hermite: matches y, y', y'' at the left node and y, y' at the
  // right node. Both derivatives are exact for the quadratic field:
  // y' = y^2 and y'' = 2 y . y^2.
  const DVec f0 = system->square(y0);
  const DVec f1 = system->square(y1);
  DVec g0 = system->product(y0, f0);
  for (auto& v : g0) v *= 2.0;
  DVec out(y0.size());
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  for (size_t i = 0; i < out.size(); ++i) {
    const double aa = y1[i] - y0[i] - h * f0[i] - 0.5 * h * h * g0[i];
    const double bb = h * f1[i] - h * f0[i] - h * h * g0[i];
    const double c4 = bb - 3 * aa;
    const double c3 = 4 * aa - bb;
    out[i] = y0[i] + h * f0[i] * s + 0.5 * h * h * g0[i] * s2 + c3 * s3 + c4 * s4;
  }
  return out;
}

Trajectory integrate(const NahmAlgebra& a, const std::vector<double>& p,
                     const FlowOptions& opts) {
  if (opts.rel_tol <= 0 || opts.abs_tol <= 0)
    throw std::invalid_argument("integrate: tolerances must be positive");
  if (static_cast<int>(p.size()) != a.dim())
    throw std::invalid_argument("integrate: initial state dimension mismatch");
  Trajectory traj;
  traj.system = std::make_shared<DoubleSystem>(a.base());
  const DoubleSystem& sys = *traj.system;

  DVec y = p;
  double t = 0.0;
  traj.times.push_back(t);
  traj.states.push_back(y);
  if (inf_norm(sys.square(y)) < opts.abs_tol) traj.status = FlowStatus::equilibrium;

  DVec k1 = sys.square(y);
  const double f0 = inf_norm(k1);
  double h = (f0 > 0) ? std::min(0.01 * std::max(inf_norm(y), 1.0) / f0, opts.t_end)
                      : opts.t_end;
  if (opts.max_step > 0) h = std::min(h, opts.max_step);
  h = std::max(h, 1e-12);

  double err_prev = 1.0;
  while (t < opts.t_end) {
    h = std::min(h, opts.t_end - t);
    const DVec k2 = sys.square(axpy(y, h * A21, k1));
    DVec yt = y;
    for (size_t i = 0; i < y.size(); ++i) yt[i] = y[i] + h * (A31 * k1[i] + A32 * k2[i]);
    const DVec k3 = sys.square(yt);
    for (size_t i = 0; i < y.size(); ++i)
      yt[i] = y[i] + h * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
    const DVec k4 = sys.square(yt);
    for (size_t i = 0; i < y.size(); ++i)
      yt[i] = y[i] + h * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
    const DVec k5 = sys.square(yt);
    for (size_t i = 0; i < y.size(); ++i)
      yt[i] = y[i] + h * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] + A65 * k5[i]);
    const DVec k6 = sys.square(yt);
    DVec y5 = y;
    for (size_t i = 0; i < y.size(); ++i)
      y5[i] = y[i] + h * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);
    const DVec k7 = sys.square(y5);

    double err = 0.0;
    for (size_t i = 0; i < y.size(); ++i) {
      const double e =
          h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
      const double sc = opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(e) / sc);
    }

    if (err <= 1.0) {
      t += h;
      y = y5;
      k1 = k7;  // first-same-as-last
      traj.times.push_back(t);
      traj.states.push_back(y);
      if (inf_norm(y) > opts.blow_up_norm) {
        traj.status = FlowStatus::blow_up;
        traj.blow_up_estimate = estimate_blow_up(traj.times, traj.states);
        break;
      }
      err_prev = std::max(err, 1e-10);
    }
    const double fac =
        0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
    h *= std::clamp(fac, 0.2, 5.0);
    if (opts.max_step > 0) h = std::min(h, opts.max_step);
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      traj.status = FlowStatus::step_underflow;
      break;
    }
  }

  // Diagnostic channels for the requested monitors. The exact gram is
  // converted to binary64 once, not per sample.
  if (opts.monitors.count("potential") || opts.monitors.count("gradient")) {
    const BilinearForm form = a.standard_form();
    const int d = a.dim();
    DMat gram(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) gram.at(i, j) = form.gram().at(i, j).to_double();
    auto phi = [&](const DVec& v) {
      const auto sq = sys.square(v);
      double s = 0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (gram.at(i, j) != 0.0) s += v[i] * gram.at(i, j) * sq[j];
      return s / 3.0;
    };
    if (opts.monitors.count("potential")) {
      std::vector<double>& pot = traj.diagnostics["potential"];
      for (const auto& st : traj.states) pot.push_back(phi(st));
    }
    if (opts.monitors.count("gradient")) {
      if (!form.is_nondegenerate())
        throw std::invalid_argument("integrate: gradient monitor needs a nondegenerate form");
      const double h = 1e-5;
      std::vector<double>& ch = traj.diagnostics["gradient"];
      for (const auto& st : traj.states) {
        DVec grad(d);
        DVec v = st;
        for (int i = 0; i < d; ++i) {
          v[i] = st[i] + h;
          const double fp = phi(v);
          v[i] = st[i] - h;
          const double fm = phi(v);
          v[i] = st[i];
          grad[i] = (fp - fm) / (2 * h);
        }
        DVec solved;
        if (!lu_solve(gram, grad, solved))
          throw std::logic_error("integrate: gram solve failed in the gradient channel");
        const auto sq = sys.square(st);
        double worst = 0;
        for (int i = 0; i < d; ++i) worst = std::max(worst, std::abs(solved[i] - sq[i]));
        ch.push_back(worst);
      }
    }
  }
  if (opts.monitors.count("confinement")) {
    // Residual against the generated subalgebra of the (rationalized) start.
    Vec v(p.size());
    for (size_t i = 0; i < p.size(); ++i) v[i] = Rat::from_double(p[i], 1000000);
    const auto q = orthonormal_basis(subalgebra_generated(a, a.unflatten(v)).closure);
    std::vector<double>& ch = traj.diagnostics["confinement"];
    for (const auto& st : traj.states) ch.push_back(residual_off(q, st));
  }
  return traj;
}

Trajectory integrate(const NahmAlgebra& a, const NahmElement& p, const FlowOptions& opts) {
  const Vec flat = a.flatten(p);
  std::vector<double> pd(flat.size());
  for (size_t i = 0; i < flat.size(); ++i) pd[i] = flat[i].to_double();
  return integrate(a, pd, opts);
}

double monitor_confinement(const NahmAlgebra& a, const Trajectory& traj, const NahmElement& p,
                           double norm_cutoff) {
  const auto q = orthonormal_basis(subalgebra_generated(a, p).closure);
  double worst = 0.0;
  for (const auto& st : traj.states) {
    if (inf_norm(st) > norm_cutoff) continue;
    worst = std::max(worst, residual_off(q, st));
  }
  return worst;
}

double potential_value(const NahmAlgebra& a, const std::vector<double>& x) {
  const DoubleSystem sys(a.base());
  const auto sq = sys.square(x);
  const BilinearForm form = a.standard_form();
  const Mat& g = form.gram();
  double s = 0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      const double gij = g.at(i, j).to_double();
      if (gij != 0.0) s += x[i] * gij * sq[j];
    }
  return s / 3.0;
}

double monitor_gradient(const NahmAlgebra& a, const std::vector<double>& x, double h) {
  const BilinearForm c = a.standard_form();
  if (!c.is_nondegenerate())
    throw std::invalid_argument("monitor_gradient: standard form is degenerate");
  const int d = a.dim();
  if (static_cast<int>(x.size()) != d)
    throw std::invalid_argument("monitor_gradient: dimension mismatch");
  const DoubleSystem sys(a.base());
  const Mat& gm = c.gram();
  DMat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g.at(i, j) = gm.at(i, j).to_double();
  auto phi = [&](const std::vector<double>& v) {
    const auto sq = sys.square(v);
    double s = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (g.at(i, j) != 0.0) s += v[i] * g.at(i, j) * sq[j];
    return s / 3.0;
  };
  std::vector<double> grad(d);
  std::vector<double> v = x;
  for (int i = 0; i < d; ++i) {
    v[i] = x[i] + h;
    const double fp = phi(v);
    v[i] = x[i] - h;
    const double fm = phi(v);
    v[i] = x[i];
    grad[i] = (fp - fm) / (2 * h);
  }
  // Gradient w.r.t. the C-inner product: solve G y = coordinate gradient.
  std::vector<double> y;
  if (!lu_solve(g, grad, y)) throw std::logic_error("monitor_gradient: gram solve failed");
  const auto sq = sys.square(x);
  double worst = 0;
  for (int i = 0; i < d; ++i) worst = std::max(worst, std::abs(y[i] - sq[i]));
  return worst;
}

bool monitor_monotone(const NahmAlgebra& a, const Trajectory& traj, double abs_tol) {
  if (!a.is_compact())
    throw std::invalid_argument("monitor_monotone: algebra is not compact semisimple");
  double prev = -1e300;
  for (const auto& st : traj.states) {
    const double v = potential_value(a, st);
    if (v < prev - 10 * abs_tol) return false;
    prev = v;
  }
  return true;
}

double monitor_decoupling(const LieAlgebra& g1, const LieAlgebra& g2, const NahmElement& p1,
                          const NahmElement& p2, const FlowOptions& opts) {
  const LieAlgebra sum = direct_sum(g1, g2);
  const NahmAlgebra a1{g1}, a2{g2}, asum{sum};
  const int n1 = g1.dim(), n2 = g2.dim(), n = n1 + n2;
  NahmElement p{Vec(n), Vec(n), Vec(n)};
  const Vec* src1[3] = {&p1.x1, &p1.x2, &p1.x3};
  const Vec* src2[3] = {&p2.x1, &p2.x2, &p2.x3};
  Vec* dst[3] = {&p.x1, &p.x2, &p.x3};
  for (int s = 0; s < 3; ++s) {
    for (int k = 0; k < n1; ++k) (*dst[s])[k] = (*src1[s])[k];
    for (int k = 0; k < n2; ++k) (*dst[s])[n1 + k] = (*src2[s])[k];
  }
  const Trajectory ts = integrate(asum, p, opts);
  const Trajectory t1 = integrate(a1, p1, opts);
  const Trajectory t2 = integrate(a2, p2, opts);
  const double t_max = std::min({ts.t_back(), t1.t_back(), t2.t_back()});
  double worst = 0.0;
  const int grid = 100;
  for (int k = 0; k <= grid; ++k) {
    const double t = t_max * k / grid;
    const auto ys = ts.sample(t);
    const auto y1 = t1.sample(t);
    const auto y2 = t2.sample(t);
    for (int s = 0; s < 3; ++s) {
      for (int i = 0; i < n1; ++i)
        worst = std::max(worst, std::abs(ys[s * n + i] - y1[s * n1 + i]));
      for (int i = 0; i < n2; ++i)
        worst = std::max(worst, std::abs(ys[s * n + n1 + i] - y2[s * n2 + i]));
    }
  }
  return worst;
}

void write_csv(std::ostream& os, const NahmAlgebra& a, const Trajectory& traj) {
  const int n = a.n();
  os << "t";
  for (int s = 1; s <= 3; ++s)
    for (int i = 1; i <= n; ++i) os << ",x" << s << "_" << i;
  for (const auto& [name, ch] : traj.diagnostics) os << "," << name;
  os << "\n";
  char buf[64];
  auto emit = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
  };
  for (size_t k = 0; k < traj.times.size(); ++k) {
    emit(traj.times[k]);
    for (double v : traj.states[k]) {
      os << ",";
      emit(v);
    }
    for (const auto& [name, ch] : traj.diagnostics) {
      os << ",";
      emit(k < ch.size() ? ch[k] : 0.0);
    }
    os << "\n";
  }
}

}  // namespace nahm
