// Acceptance suite: runs the twelve gate criteria and prints one line per
// criterion. Exit code 0 iff all pass. argv[1] (optional) is the path to the
// CLI binary used by criterion 12.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "nahm/algebra_io.hpp"
#include "nahm/catalog.hpp"
#include "nahm/derivations.hpp"
#include "nahm/flow.hpp"
#include "nahm/special.hpp"
#include "nahm/structure.hpp"
#include "nahm/theorems.hpp"

using namespace nahm;

namespace {

int g_failures = 0;
int g_index = 0;

void criterion(const std::string& label, const std::function<bool(std::string&)>& body) {
  ++g_index;
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  if (!pass) ++g_failures;
  std::printf("[%2d] %s  %s%s%s\n", g_index, pass ? "PASS" : "FAIL", label.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

NahmElement standard_idempotent(const NahmAlgebra& a) {
  const LieAlgebra& g = a.base();
  return {g.basis_vector(0), g.basis_vector(1), g.basis_vector(2)};
}

bool product_law(const NahmAlgebra& a) {
  for (int i = 0; i < a.dim(); ++i) {
    const Mat l = a.left_mult(a.basis_element(i));
    for (int j = 0; j < a.dim(); ++j) {
      const auto x = a.basis_element(i), y = a.basis_element(j);
      if (!(a.product(x, y) == a.product(y, x))) return false;
      if (l.mul_vec(a.flatten(y)) != a.flatten(a.product(x, y))) return false;
    }
  }
  return true;
}

bool grading_laws(const NahmAlgebra& a) {
  const auto rep = a.grading_check();
  return rep.pass();
}

bool trace_identity(const LieAlgebra& g, const Representation& rep) {
  const NahmAlgebra a{g};
  const BilinearForm c = a.trace_form_nahm(rep);  // throws if trace != blockdiag
  const BilinearForm b = trace_form(rep);
  for (int s = 0; s < 3; ++s)
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j)
        if (c.gram().at(s * g.dim() + i, s * g.dim() + j) != Rat(-1, 2) * b.gram().at(i, j))
          return false;
  // Invariance on all basis triples.
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) {
        const auto x = a.basis_element(i), y = a.basis_element(j), z = a.basis_element(k);
        if (c.eval(a.flatten(a.product(x, y)), a.flatten(z)) !=
            c.eval(a.flatten(x), a.flatten(a.product(y, z))))
          return false;
      }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion("Nahm product law: commutativity + left-mult consistency (so3, sl2, heisenberg, "
            "sl2+aff1)",
            [&](std::string&) {
              for (const auto& name : {"so3", "sl2", "heisenberg", "sl2+aff1"})
                if (!product_law(NahmAlgebra{catalog(name)})) return false;
              return true;
            });

  criterion("Grading laws Delta.Delta=0, Delta.W in W, W.W in Delta, P_D+P_W=I (all catalog)",
            [&](std::string&) {
              for (const auto& name :
                   {"so3", "sl2", "heisenberg", "aff1", "abelian(2)", "so3+so3", "sl2+aff1"})
                if (!grading_laws(NahmAlgebra{catalog(name)})) return false;
              return true;
            });

  criterion("Trace-form identity and invariance (adjoint + defining reps of so3 and sl2)",
            [&](std::string&) {
              if (!trace_identity(catalog("so3"), Representation::adjoint(catalog("so3"))))
                return false;
              if (!trace_identity(catalog("so3"), so3_defining_representation())) return false;
              if (!trace_identity(catalog("sl2"), Representation::adjoint(catalog("sl2"))))
                return false;
              if (!trace_identity(catalog("sl2"), sl2_defining_representation())) return false;
              return true;
            });

  criterion("Structure transfer: simplicity, semisimplicity, radical (six catalog algebras)",
            [&](std::string&) {
              for (const auto& name :
                   {"so3", "sl2", "heisenberg", "aff1", "so3+so3", "sl2+aff1"}) {
                const LieAlgebra g = catalog(name);
                const NahmAlgebra a{g};
                if (is_simple_nahm(a) != g.is_simple()) return false;
                if (is_semisimple_nahm(a) != g.is_semisimple()) return false;
                const Subspace rad = g.radical();
                if (!(radical_nahm(a) == triple_span(a, rad, rad, rad))) return false;
              }
              return true;
            });

  criterion("Standard form of A(so3) = identity, positive definite, compact",
            [&](std::string&) {
              const NahmAlgebra a{catalog("so3")};
              return a.standard_form().gram() == Mat::identity(9) &&
                     a.standard_form().definiteness() == Definiteness::positive_definite &&
                     a.is_compact();
            });

  criterion("Derivations: dim 6 = diag(ad g) (+) so(3) for so3 and sl2; dim 36 for abelian(2); "
            "diag/off split",
            [&](std::string&) {
              for (const auto& name : {"so3", "sl2"}) {
                const NahmAlgebra a{catalog(name)};
                const auto rep = decomposition_check(a);
                if (rep.der_dim != 6 || !rep.pass()) return false;
              }
              const NahmAlgebra ab{catalog("abelian(2)")};
              if (derivation_algebra(ab).dim() != 36) return false;
              for (const auto& name : {"so3", "sl2", "abelian(2)"}) {
                const NahmAlgebra a{catalog(name)};
                const Subspace der = derivation_algebra(a);
                for (int r = 0; r < der.dim(); ++r) {
                  const Mat t = Mat::from_vector(der.basis_vector(r), a.dim(), a.dim());
                  if (!is_derivation(a, t_diag_part(t, a.n()))) return false;
                  if (!is_derivation(a, t_off_part(t, a.n()))) return false;
                }
              }
              return true;
            });

  criterion("Schur: centralizer dim 1 for A(so3); >= 2 for A(so3+so3)", [&](std::string& d) {
    const int d1 = schur_centralizer(NahmAlgebra{catalog("so3")}).dim();
    const int d2 = schur_centralizer(NahmAlgebra{catalog("so3+so3")}).dim();
    d = "dims " + std::to_string(d1) + ", " + std::to_string(d2);
    return d1 == 1 && d2 >= 2;
  });

  criterion("Automorphisms: U exact, in SO(3), involution, exp(G)=U to 1e-12, factorization",
            [&](std::string&) {
              const NahmAlgebra a{catalog("so3")};
              const auto ga = grading_automorphism(a);  // verifies U in SO(3), U^2=I, Aut
              for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                  if (ga.u.at(i, j) != (i == j ? Rat(-1, 3) : Rat(2, 3))) return false;
              if (ga.exp_error > 1e-12) return false;
              Mat phi(3, 3);
              phi.at(1, 0) = Rat(1);
              phi.at(2, 1) = Rat(1);
              phi.at(0, 2) = Rat(1);
              const Mat ub = blockwise(ga.u, 3);
              const Mat dphi = lift_hom(a.base(), a.base(), phi);
              const auto f1 = aut_factorization(a, ub);
              if (!f1.ok || !f1.phi.is_identity() || !(f1.r == ga.u)) return false;
              const auto f2 = aut_factorization(a, dphi);
              if (!f2.ok || !(f2.phi == phi) || !f2.r.is_identity()) return false;
              const auto f3 = aut_factorization(a, dphi * ub);
              if (!f3.ok || !(f3.phi == phi) || !(f3.r == ga.u)) return false;
              return true;
            });

  criterion("Idempotents and nilpotents: E^2=E, Delta(x)^2=0 (10 random), Newton <= 20 iters to "
            "1e-10",
            [&](std::string& d) {
              const NahmAlgebra a{catalog("so3")};
              const NahmElement e = standard_idempotent(a);
              if (!is_idempotent(a, e)) return false;
              std::mt19937_64 rng(99);
              std::uniform_int_distribution<int> di(-5, 5);
              for (int t = 0; t < 10; ++t) {
                Vec x(3);
                for (auto& v : x) v = Rat(di(rng));
                if (!is_nilpotent(a, a.delta(x)).nilpotent) return false;
              }
              const Vec flat = a.flatten(e);
              std::vector<double> x0(flat.size());
              for (size_t i = 0; i < flat.size(); ++i) x0[i] = 1.1 * flat[i].to_double();
              const auto res = find_idempotent(a, x0, 1e-10, 20);
              d = "newton iterations = " + std::to_string(res.iterations) +
                  ", residual = " + [&]{ char b[32]; std::snprintf(b, sizeof b, "%.3g", res.residual); return std::string(b); }();
              return res.converged && res.iterations <= 20 && res.residual <= 1e-10;
            });

  criterion("Power-associativity failure: X=(e1,e2,0) has ((X^2)X)X = (0,0,e3/2) != 0 = "
            "(X^2)(X^2)",
            [&](std::string&) {
              const NahmAlgebra a{catalog("so3")};
              const LieAlgebra& g = a.base();
              const NahmElement x{g.basis_vector(0), g.basis_vector(1), Vec(3)};
              const NahmElement sq = a.square(x);
              const NahmElement left = a.product(a.product(sq, x), x);
              const NahmElement right = a.product(sq, sq);
              const NahmElement expected{Vec(3), Vec(3), Rat(1, 2) * g.basis_vector(2)};
              if (!(left == expected)) return false;
              if (!right.is_zero()) return false;
              const auto w = power_assoc_witness(a);
              return w.has_value() && w->x == x;
            });

  criterion("Flow: blow-up in [0.99,1.01]; drift <= 1e-9; confinement <= 1e-6; gradient <= 1e-8; "
            "transport <= 1e-6; decoupling <= 1e-6",
            [&](std::string& d) {
              const NahmAlgebra a{catalog("so3")};
              const LieAlgebra& g = a.base();
              const NahmElement e = standard_idempotent(a);
              FlowOptions opts;

              opts.t_end = 2.0;
              const Trajectory ray = integrate(a, e, opts);
              if (ray.status != FlowStatus::blow_up) return false;
              if (ray.blow_up_estimate < 0.99 || ray.blow_up_estimate > 1.01) return false;
              d = "t_est = " + [&]{ char b[32]; std::snprintf(b, sizeof b, "%.6g", ray.blow_up_estimate); return std::string(b); }();

              opts.t_end = 10.0;
              const Trajectory eq = integrate(a, a.delta(g.basis_vector(0)), opts);
              if (eq.status != FlowStatus::equilibrium) return false;
              double drift = 0;
              for (const auto& st : eq.states)
                for (size_t i = 0; i < st.size(); ++i)
                  drift = std::max(drift, std::abs(st[i] - eq.states.front()[i]));
              if (drift > 1e-9) return false;

              FlowOptions half;
              half.t_end = 0.5;
              const NahmElement dx = a.delta(g.basis_vector(0));
              if (monitor_confinement(a, integrate(a, dx, half), dx) > 1e-6) return false;
              if (monitor_confinement(a, ray, e, 1e3) > 1e-6) return false;
              const NahmElement p{g.basis_vector(0), g.basis_vector(1), Vec(3)};
              if (monitor_confinement(a, integrate(a, p, half), p) > 1e-6) return false;

              std::mt19937_64 rng(7);
              std::uniform_real_distribution<double> dr(-1.0, 1.0);
              for (int t = 0; t < 10; ++t) {
                std::vector<double> x(9);
                for (auto& v : x) v = dr(rng);
                if (monitor_gradient(a, x, 1e-5) > 1e-8) return false;
              }

              const auto ga = grading_automorphism(a);
              const Mat f = blockwise(ga.u, 3);
              DMat fd(9, 9);
              for (int i = 0; i < 9; ++i)
                for (int j = 0; j < 9; ++j) fd.at(i, j) = f.at(i, j).to_double();
              std::vector<double> q(9);
              for (auto& v : q) v = dr(rng);
              const Trajectory t1 = integrate(a, q, half);
              const Trajectory t2 = integrate(a, mul_vec(fd, q), half);
              const double tmax = std::min(t1.t_back(), t2.t_back());
              for (int k = 0; k <= 50; ++k) {
                const double t = tmax * k / 50;
                const auto fy = mul_vec(fd, t1.sample(t));
                const auto y = t2.sample(t);
                for (size_t i = 0; i < y.size(); ++i)
                  if (std::abs(fy[i] - y[i]) > 1e-6) return false;
              }

              if (monitor_decoupling(g, g, e, dx, half) > 1e-6) return false;
              return true;
            });

  criterion("check-theorems catalog:so3 exits 0 with >= 25 referenced check lines",
            [&](std::string& d) {
              if (cli.empty()) {
                d = "CLI path not supplied";
                return false;
              }
              const std::string cmd = cli + " check-theorems catalog:so3 2>/dev/null";
              FILE* pipe = popen(cmd.c_str(), "r");
              if (!pipe) {
                d = "cannot launch CLI";
                return false;
              }
              std::string output;
              char buf[4096];
              size_t got;
              while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
              const int status = pclose(pipe);
              const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
              int live = 0, failed = 0, unreferenced = 0;
              std::istringstream is(output);
              std::string line;
              while (std::getline(is, line)) {
                const bool pass = line.rfind("PASS", 0) == 0;
                const bool fail = line.rfind("FAIL", 0) == 0;
                if (!pass && !fail) continue;
                ++live;
                if (fail) ++failed;
                if (line.find(" -- ") == std::string::npos ||
                    line.substr(line.find(" -- ") + 4).empty())
                  ++unreferenced;
              }
              d = "exit " + std::to_string(exit_code) + ", " + std::to_string(live) +
                  " checks, " + std::to_string(failed) + " failed";
              return exit_code == 0 && live >= 25 && failed == 0 && unreferenced == 0;
            });

  std::printf("%d/%d criteria passed\n", g_index - g_failures, g_index);
  return g_failures == 0 ? 0 : 1;
}
