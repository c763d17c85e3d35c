#include "nahm/special.hpp"

#include <random>

#include "nahm/double_system.hpp"

namespace nahm {

So3Triple make_so3_triple(const LieAlgebra& g, Vec e1, Vec e2, Vec e3) {
  if (g.bracket(e1, e2) != e3 || g.bracket(e2, e3) != e1 || g.bracket(e3, e1) != e2)
    throw std::invalid_argument("make_so3_triple: relations [e_i,e_{i+1}] = e_{i+2} violated");
  if (Subspace::span(g.dim(), {e1, e2, e3}).dim() != 3)
    throw std::invalid_argument("make_so3_triple: components are linearly dependent");
  return {std::move(e1), std::move(e2), std::move(e3)};
}

NilpotencyReport is_nilpotent(const NahmAlgebra& a, const NahmElement& x) {
  NilpotencyReport rep;
  rep.nilpotent = a.square(x).is_zero();
  rep.is_zero_element = x.is_zero();
  const Vec* comp[3] = {&x.x1, &x.x2, &x.x3};
  rep.components_commute = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!vec_is_zero(a.base().bracket(*comp[i], *comp[j]))) rep.components_commute = false;
  rep.triple_span_abelian = rep.components_commute;
  if (rep.components_commute) {
    // K n1 x K n2 x K n3 must be an abelian subalgebra: all pairwise products
    // of the slot generators vanish.
    const int n = a.n();
    std::vector<NahmElement> gens;
    auto slot = [&](const Vec& v, int s) {
      NahmElement e{Vec(n), Vec(n), Vec(n)};
      (s == 0 ? e.x1 : s == 1 ? e.x2 : e.x3) = v;
      return e;
    };
    for (int s = 0; s < 3; ++s) gens.push_back(slot(*comp[s], s));
    for (const auto& u : gens)
      for (const auto& v : gens)
        if (!a.product(u, v).is_zero()) rep.triple_span_abelian = false;
  }
  return rep;
}

bool is_idempotent(const NahmAlgebra& a, const NahmElement& e) {
  if (e.is_zero()) return false;
  if (!(a.square(e) == e)) return false;
  if (vec_is_zero(e.x1) || vec_is_zero(e.x2) || vec_is_zero(e.x3))
    throw std::logic_error("is_idempotent: idempotent with a zero component");
  if (Subspace::span(a.n(), {e.x1, e.x2, e.x3}).dim() != 3)
    throw std::logic_error("is_idempotent: idempotent with dependent components");
  return true;
}

NahmElement idempotent_from_so3(const NahmAlgebra& a, const So3Triple& t) {
  NahmElement e{t.e1, t.e2, t.e3};
  if (!is_idempotent(a, e)) throw std::logic_error("idempotent_from_so3: E^2 != E");
  return e;
}

namespace {

NewtonResult newton_iterate(const NahmAlgebra& a, std::vector<double> x0, double tol,
                            int max_iter) {
  if (tol <= 0) throw std::invalid_argument("find_idempotent: tol must be positive");
  const DoubleSystem sys(a.base());
  const int d = sys.dim();
  if (static_cast<int>(x0.size()) != d)
    throw std::invalid_argument("find_idempotent: start point dimension mismatch");
  NewtonResult out;
  std::vector<double> x = std::move(x0);
  auto residual_of = [&](const std::vector<double>& v) {
    std::vector<double> f = sys.square(v);
    for (int i = 0; i < d; ++i) f[i] -= v[i];
    return f;
  };
  std::vector<double> f = residual_of(x);
  double fnorm = inf_norm(f);
  for (int it = 0; it < max_iter; ++it) {
    if (fnorm <= tol) {
      out.converged = true;
      out.x = x;
      out.residual = fnorm;
      out.iterations = it;
      return out;
    }
    DMat jac = sys.left_mult(x);
    for (auto& v : jac.e) v *= 2.0;
    for (int i = 0; i < d; ++i) jac.at(i, i) -= 1.0;
    std::vector<double> rhs(d);
    for (int i = 0; i < d; ++i) rhs[i] = -f[i];
    std::vector<double> step;
    if (!lu_solve(jac, rhs, step)) {
      // Tikhonov-damped least squares: (J^t J + lambda I) s = -J^t f.
      const double lambda = 1e-8 * std::max(1.0, inf_norm(jac));
      DMat jt(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) jt.at(i, j) = jac.at(j, i);
      DMat m = jt * jac;
      for (int i = 0; i < d; ++i) m.at(i, i) += lambda;
      if (!lu_solve(m, mul_vec(jt, rhs), step)) {
        out.failure = "singular";
        break;
      }
    }
    double damp = 1.0;
    bool accepted = false;
    for (int half = 0; half <= 30; ++half) {
      std::vector<double> trial(d);
      for (int i = 0; i < d; ++i) trial[i] = x[i] + damp * step[i];
      std::vector<double> tf = residual_of(trial);
      const double tn = inf_norm(tf);
      if (tn < fnorm || tn <= tol) {
        x = std::move(trial);
        f = std::move(tf);
        fnorm = tn;
        accepted = true;
        break;
      }
      damp *= 0.5;
    }
    if (!accepted) {
      out.failure = "stalled";
      out.x = x;
      out.residual = fnorm;
      out.iterations = it + 1;
      return out;
    }
    if (inf_norm(x) > 1e12) {
      out.failure = "divergence";
      out.x = x;
      out.residual = fnorm;
      out.iterations = it + 1;
      return out;
    }
    out.iterations = it + 1;
  }
  if (fnorm <= tol) {
    out.converged = true;
  } else if (out.failure.empty()) {
    out.failure = "max_iter";
  }
  out.x = x;
  out.residual = fnorm;
  return out;
}

NewtonResult reject_zero_limit(NewtonResult res) {
  // X = 0 satisfies X^2 - X = 0 but idempotents are nonzero by definition;
  // genuine idempotents have norm bounded away from zero.
  if (res.converged && inf_norm(res.x) < 1e-3) {
    res.converged = false;
    res.failure = "zero_limit";
  }
  return res;
}

}  // namespace

NewtonResult find_idempotent(const NahmAlgebra& a, std::vector<double> x0, double tol,
                             int max_iter) {
  return reject_zero_limit(newton_iterate(a, std::move(x0), tol, max_iter));
}

NewtonResult find_idempotent_random(const NahmAlgebra& a, std::uint64_t seed, double tol,
                                    int max_iter) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x0(a.dim());
  for (auto& v : x0) v = dist(rng);
  return find_idempotent(a, std::move(x0), tol, max_iter);
}

std::optional<NahmElement> exactify_idempotent(const NahmAlgebra& a,
                                               const std::vector<double>& x, long max_den) {
  if (static_cast<int>(x.size()) != a.dim())
    throw std::invalid_argument("exactify_idempotent: dimension mismatch");
  Vec v(x.size());
  for (size_t i = 0; i < x.size(); ++i) v[i] = Rat::from_double(x[i], max_den);
  const NahmElement e = a.unflatten(v);
  if (e.is_zero() || !(a.square(e) == e)) return std::nullopt;
  return e;
}

std::optional<PowerAssocWitness> power_assoc_witness(const NahmAlgebra& a) {
  auto try_witness = [&](const NahmElement& x) -> std::optional<PowerAssocWitness> {
    const NahmElement sq = a.square(x);
    const NahmElement left = a.product(a.product(sq, x), x);
    const NahmElement right = a.product(sq, sq);
    if (left == right) return std::nullopt;
    return PowerAssocWitness{x, left, right};
  };
  for (int i = 0; i < a.dim(); ++i)
    if (auto w = try_witness(a.basis_element(i))) return w;
  // Pairs b_i +/- b_j across the three slot patterns, deterministic order.
  const int n = a.n();
  constexpr int slot_pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& [s, t] : slot_pairs)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const int sign : {1, -1}) {
          NahmElement x{Vec(n), Vec(n), Vec(n)};
          Vec* slots[3] = {&x.x1, &x.x2, &x.x3};
          (*slots[s])[i] += Rat(1);
          (*slots[t])[j] += Rat(sign);
          if (auto w = try_witness(x)) return w;
        }
  return std::nullopt;
}

}  // namespace nahm
