#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "nahm/catalog.hpp"
#include "nahm/derivations.hpp"
#include "nahm/flow.hpp"

using namespace nahm;

namespace {

NahmElement standard_idempotent(const NahmAlgebra& a) {
  const LieAlgebra& g = a.base();
  return {g.basis_vector(0), g.basis_vector(1), g.basis_vector(2)};
}

}  // namespace

TEST_CASE("equilibrium from a diagonal start: constant to 1e-9 over [0,10]") {
  const NahmAlgebra a{catalog("so3")};
  FlowOptions opts;
  opts.t_end = 10.0;
  const Trajectory traj = integrate(a, a.delta(a.base().basis_vector(0)), opts);
  CHECK(traj.status == FlowStatus::equilibrium);
  CHECK(traj.t_back() == doctest::Approx(10.0));
  const auto& first = traj.states.front();
  double drift = 0;
  for (const auto& st : traj.states)
    for (size_t i = 0; i < st.size(); ++i) drift = std::max(drift, std::abs(st[i] - first[i]));
  CHECK(drift <= 1e-9);
}

TEST_CASE("idempotent ray blows up at t = 1") {
  const NahmAlgebra a{catalog("so3")};
  FlowOptions opts;
  opts.t_end = 2.0;
  const Trajectory traj = integrate(a, standard_idempotent(a), opts);
  CHECK(traj.status == FlowStatus::blow_up);
  CHECK(traj.blow_up_estimate >= 0.99);
  CHECK(traj.blow_up_estimate <= 1.01);
  // X(t) = E / (1 - t) componentwise while the norm stays moderate.
  const Vec flat = a.flatten(standard_idempotent(a));
  for (size_t k = 0; k < traj.times.size(); ++k) {
    if (inf_norm(traj.states[k]) > 1e3) break;
    const double f = 1.0 / (1.0 - traj.times[k]);
    for (size_t i = 0; i < traj.states[k].size(); ++i) {
      const double exact = f * flat[i].to_double();
      CHECK(std::abs(traj.states[k][i] - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("negative ray decays: X(t) = -E/(1+t)") {
  const NahmAlgebra a{catalog("so3")};
  FlowOptions opts;
  opts.t_end = 10.0;
  const NahmElement e = standard_idempotent(a);
  const Trajectory traj = integrate(a, Rat(-1) * e, opts);
  CHECK(traj.status == FlowStatus::completed);
  const auto at9 = traj.sample(9.0);
  const Vec flat = a.flatten(e);
  for (size_t i = 0; i < at9.size(); ++i)
    CHECK(std::abs(at9[i] + flat[i].to_double() / 10.0) <= 1e-6);
}

TEST_CASE("confinement residuals for the three listed starts") {
  const NahmAlgebra a{catalog("so3")};
  const LieAlgebra& g = a.base();
  FlowOptions opts;
  opts.t_end = 0.5;

  const NahmElement dx = a.delta(g.basis_vector(0));
  CHECK(monitor_confinement(a, integrate(a, dx, opts), dx) <= 1e-12);

  FlowOptions blow = opts;
  blow.t_end = 2.0;
  const NahmElement e = standard_idempotent(a);
  CHECK(monitor_confinement(a, integrate(a, e, blow), e, 1e3) <= 1e-6);

  const NahmElement p{g.basis_vector(0), g.basis_vector(1), Vec(3)};
  CHECK(monitor_confinement(a, integrate(a, p, opts), p) <= 1e-6);
}

TEST_CASE("gradient identity at random points of A(so3)") {
  const NahmAlgebra a{catalog("so3")};
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> x(9);
    for (auto& v : x) v = d(rng);
    CHECK(monitor_gradient(a, x, 1e-5) <= 1e-8);
  }
  CHECK(monitor_gradient(a, std::vector<double>(9, 0.0), 1e-5) <= 1e-12);
  // grad phi at the idempotent equals E.
  const Vec flat = a.flatten(standard_idempotent(a));
  std::vector<double> e(flat.size());
  for (size_t i = 0; i < flat.size(); ++i) e[i] = flat[i].to_double();
  CHECK(monitor_gradient(a, e, 1e-5) <= 1e-8);
  CHECK_THROWS_AS(monitor_gradient(NahmAlgebra{catalog("heisenberg")},
                                   std::vector<double>(9, 0.1), 1e-5),
                  std::invalid_argument);
}

TEST_CASE("potential is monotone for the compact algebra") {
  const NahmAlgebra a{catalog("so3")};
  FlowOptions opts;
  opts.t_end = 0.5;
  std::mt19937_64 rng(57);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int t = 0; t < 5; ++t) {
    std::vector<double> p(9);
    for (auto& v : p) v = d(rng);
    CHECK(monitor_monotone(a, integrate(a, p, opts), opts.abs_tol));
  }
  // phi strictly increases along the idempotent ray until blow-up.
  FlowOptions blow;
  blow.t_end = 2.0;
  const Trajectory ray = integrate(a, standard_idempotent(a), blow);
  CHECK(monitor_monotone(a, ray, blow.abs_tol));
  CHECK(potential_value(a, ray.states.back()) > potential_value(a, ray.states.front()));
  // Constant along the diagonal equilibrium.
  const Trajectory eq = integrate(a, a.delta(a.base().basis_vector(0)), opts);
  CHECK(potential_value(a, eq.states.back()) ==
        doctest::Approx(potential_value(a, eq.states.front())).epsilon(1e-12));
  CHECK_THROWS_AS(monitor_monotone(NahmAlgebra{catalog("sl2")}, eq, 1e-12),
                  std::invalid_argument);
}

TEST_CASE("automorphism transport: blockwise U maps solutions to solutions") {
  const NahmAlgebra a{catalog("so3")};
  const auto ga = grading_automorphism(a);
  const Mat f = blockwise(ga.u, 3);
  DMat fd(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) fd.at(i, j) = f.at(i, j).to_double();
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> p(9);
  for (auto& v : p) v = d(rng);
  FlowOptions opts;
  opts.t_end = 0.5;
  const Trajectory t1 = integrate(a, p, opts);
  const Trajectory t2 = integrate(a, mul_vec(fd, p), opts);
  const double tmax = std::min(t1.t_back(), t2.t_back());
  for (int k = 0; k <= 40; ++k) {
    const double t = tmax * k / 40;
    const auto fy = mul_vec(fd, t1.sample(t));
    const auto y = t2.sample(t);
    for (size_t i = 0; i < y.size(); ++i) CHECK(std::abs(fy[i] - y[i]) <= 1e-6);
  }
}

TEST_CASE("decoupling across so3 (+) so3") {
  const LieAlgebra g = catalog("so3");
  const NahmAlgebra a{g};
  FlowOptions opts;
  opts.t_end = 0.5;
  const NahmElement e = standard_idempotent(a);
  const NahmElement dx = a.delta(g.basis_vector(0));
  CHECK(monitor_decoupling(g, g, e, dx, opts) <= 1e-6);
  // Zero second component stays zero.
  CHECK(monitor_decoupling(g, g, e, a.zero_element(), opts) <= 1e-6);
  std::mt19937_64 rng(63);
  std::uniform_int_distribution<int> di(-2, 2);
  NahmElement p1{Vec(3), Vec(3), Vec(3)}, p2{Vec(3), Vec(3), Vec(3)};
  for (Vec* v : {&p1.x1, &p1.x2, &p1.x3, &p2.x1, &p2.x2, &p2.x3})
    for (auto& x : *v) x = Rat(di(rng), 2);
  CHECK(monitor_decoupling(g, g, p1, p2, opts) <= 1e-6);
}

TEST_CASE("derivation flow: DP = P^2 cases and exponential symmetry") {
  const NahmAlgebra a{catalog("so3")};
  const LieAlgebra& g = a.base();
  // P = Delta(x), D = diag(ad x): DP = 0 = P^2 and the solution is constant.
  const Vec x = g.basis_vector(2);
  const Mat d = diag_ad(a, x);
  const NahmElement p = a.delta(x);
  CHECK(d.mul_vec(a.flatten(p)) == a.flatten(a.square(p)));
  FlowOptions opts;
  opts.t_end = 1.0;
  const Trajectory traj = integrate(a, p, opts);
  CHECK(traj.status == FlowStatus::equilibrium);

  // exp(sD) is an automorphism: numeric multiplicativity residual stays tiny.
  DMat dd(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) dd.at(i, j) = d.at(i, j).to_double();
  const DoubleSystem sys(g);
  for (const double s : {0.3, 1.0}) {
    const DMat f = mat_exp(scale(s, dd));
    std::vector<double> bi(9, 0.0), bj(9, 0.0);
    for (int i = 0; i < 9; ++i)
      for (int j = i; j < 9; ++j) {
        bi.assign(9, 0.0);
        bj.assign(9, 0.0);
        bi[i] = 1.0;
        bj[j] = 1.0;
        const auto lhs = mul_vec(f, sys.product(bi, bj));
        const auto rhs = sys.product(mul_vec(f, bi), mul_vec(f, bj));
        for (size_t k = 0; k < lhs.size(); ++k) CHECK(std::abs(lhs[k] - rhs[k]) <= 1e-10);
      }
  }
}

TEST_CASE("csv export: header, monitor columns, 17 significant digits") {
  const NahmAlgebra a{catalog("so3")};
  FlowOptions opts;
  opts.t_end = 0.25;
  opts.monitors = {"confinement", "potential"};
  const Trajectory traj = integrate(a, standard_idempotent(a), opts);
  std::ostringstream os;
  write_csv(os, a, traj);
  const std::string text = os.str();
  CHECK(text.rfind("t,x1_1,x1_2,x1_3,x2_1,x2_2,x2_3,x3_1,x3_2,x3_3,confinement,potential\n", 0) ==
        0);
  // One row per sample plus the header.
  size_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == traj.times.size() + 1);
  // 1/3 printed with 17 significant digits appears in full precision.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", 1.0 / 3.0);
  CHECK(std::string(buf).size() >= 18);
}

TEST_CASE("blow-up guard and step underflow reporting") {
  const NahmAlgebra a{catalog("so3")};
  FlowOptions opts;
  opts.t_end = 5.0;
  opts.blow_up_norm = 1e6;
  const Trajectory traj = integrate(a, standard_idempotent(a), opts);
  CHECK(traj.status == FlowStatus::blow_up);
  CHECK(inf_norm(traj.states.back()) > 1e6);
  CHECK(traj.blow_up_estimate == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("options are validated and sample times increase strictly") {
  const NahmAlgebra a{catalog("so3")};
  FlowOptions bad;
  bad.rel_tol = 0;
  CHECK_THROWS_AS(integrate(a, standard_idempotent(a), bad), std::invalid_argument);
  CHECK(FlowOptions{}.blow_up_norm == 1e9);

  FlowOptions opts;
  opts.t_end = 1.5;
  const Trajectory traj = integrate(a, standard_idempotent(a), opts);
  for (size_t k = 1; k < traj.times.size(); ++k) CHECK(traj.times[k] > traj.times[k - 1]);
  CHECK(traj.states.size() == traj.times.size());
  // max_step caps accepted steps.
  FlowOptions capped;
  capped.t_end = 1.0;
  capped.max_step = 0.01;
  const Trajectory fine = integrate(a, a.delta(a.base().basis_vector(0)), capped);
  for (size_t k = 1; k < fine.times.size(); ++k)
    CHECK(fine.times[k] - fine.times[k - 1] <= 0.01 + 1e-12);
}

TEST_CASE("dense output interpolates to integrator accuracy") {
  const NahmAlgebra a{catalog("so3")};
  FlowOptions opts;
  opts.t_end = 0.9;
  const Trajectory traj = integrate(a, standard_idempotent(a), opts);
  // Compare dense samples against the closed form E/(1-t).
  const Vec flat = a.flatten(standard_idempotent(a));
  for (int k = 0; k <= 50; ++k) {
    const double t = 0.8 * k / 50;
    const auto y = traj.sample(t);
    const double f = 1.0 / (1.0 - t);
    for (size_t i = 0; i < y.size(); ++i)
      CHECK(std::abs(y[i] - f * flat[i].to_double()) <= 1e-6 * std::max(1.0, f));
  }
  CHECK_THROWS_AS(static_cast<void>(traj.sample(5.0)), std::out_of_range);
}
