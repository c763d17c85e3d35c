#include "nahm/nahm_algebra.hpp"

namespace nahm {

NahmElement operator+(const NahmElement& a, const NahmElement& b) {
  return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}
NahmElement operator-(const NahmElement& a, const NahmElement& b) {
  return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}
NahmElement operator*(const Rat& s, const NahmElement& x) {
  return {s * x.x1, s * x.x2, s * x.x3};
}

NahmAlgebra::NahmAlgebra(LieAlgebra base) : base_(std::move(base)) { base_.require_valid(); }

Vec NahmAlgebra::flatten(const NahmElement& x) const {
  if (static_cast<int>(x.x1.size()) != n() || static_cast<int>(x.x2.size()) != n() ||
      static_cast<int>(x.x3.size()) != n())
    throw std::invalid_argument("NahmAlgebra: element dimension mismatch");
  Vec v;
  v.reserve(dim());
  v.insert(v.end(), x.x1.begin(), x.x1.end());
  v.insert(v.end(), x.x2.begin(), x.x2.end());
  v.insert(v.end(), x.x3.begin(), x.x3.end());
  return v;
}

NahmElement NahmAlgebra::unflatten(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim())
    throw std::invalid_argument("NahmAlgebra: flat vector dimension mismatch");
  NahmElement x;
  x.x1.assign(v.begin(), v.begin() + n());
  x.x2.assign(v.begin() + n(), v.begin() + 2 * n());
  x.x3.assign(v.begin() + 2 * n(), v.end());
  return x;
}

NahmElement NahmAlgebra::basis_element(int i) const {
  Vec v(dim());
  v.at(i) = Rat(1);
  return unflatten(v);
}

NahmElement NahmAlgebra::zero_element() const { return {Vec(n()), Vec(n()), Vec(n())}; }

NahmElement NahmAlgebra::product(const NahmElement& x, const NahmElement& y) const {
  const Rat half(1, 2);
  NahmElement r;
  r.x1 = half * (base_.bracket(x.x2, y.x3) + base_.bracket(y.x2, x.x3));
  r.x2 = half * (base_.bracket(x.x3, y.x1) + base_.bracket(y.x3, x.x1));
  r.x3 = half * (base_.bracket(x.x1, y.x2) + base_.bracket(y.x1, x.x2));
  return r;
}

NahmElement NahmAlgebra::square(const NahmElement& x) const {
  NahmElement r;
  r.x1 = base_.bracket(x.x2, x.x3);
  r.x2 = base_.bracket(x.x3, x.x1);
  r.x3 = base_.bracket(x.x1, x.x2);
  return r;
}

Mat NahmAlgebra::left_mult(const NahmElement& x) const {
  return l_rho(Representation::adjoint(base_), x);
}

Mat NahmAlgebra::l_rho(const Representation& rep, const NahmElement& x) const {
  const int v = rep.space_dim();
  const Rat half(1, 2);
  const Mat r1 = rep.rho(x.x1), r2 = rep.rho(x.x2), r3 = rep.rho(x.x3);
  Mat m(3 * v, 3 * v);
  m.set_block(0, v, Rat(-1, 2) * r3);
  m.set_block(0, 2 * v, half * r2);
  m.set_block(v, 0, half * r3);
  m.set_block(v, 2 * v, Rat(-1, 2) * r1);
  m.set_block(2 * v, 0, Rat(-1, 2) * r2);
  m.set_block(2 * v, v, half * r1);
  return m;
}

NahmElement NahmAlgebra::delta(const Vec& x) const { return {x, x, x}; }

NahmElement NahmAlgebra::proj_delta(const NahmElement& x) const {
  return delta(Rat(1, 3) * (x.x1 + x.x2 + x.x3));
}

NahmElement NahmAlgebra::proj_w(const NahmElement& x) const { return x - proj_delta(x); }

Subspace NahmAlgebra::delta_subspace() const {
  std::vector<Vec> gens;
  for (int i = 0; i < n(); ++i) gens.push_back(flatten(delta(base_.basis_vector(i))));
  return Subspace::span(dim(), gens);
}

Subspace NahmAlgebra::w_subspace() const {
  // x1 + x2 + x3 = 0: nullspace of the n x 3n matrix [I I I].
  Mat sys(n(), dim());
  for (int i = 0; i < n(); ++i)
    for (int s = 0; s < 3; ++s) sys.at(i, s * n() + i) = Rat(1);
  return nullspace(sys);
}

GradingCheck NahmAlgebra::grading_check() const {
  GradingCheck rep;
  const Subspace d = delta_subspace();
  const Subspace w = w_subspace();
  auto note = [&](bool& flag, int i, int j, const char* what) {
    if (flag) {
      flag = false;
      if (rep.witness.empty())
        rep.witness = std::string(what) + " fails at basis pair (" + std::to_string(i) + "," +
                      std::to_string(j) + ")";
    }
  };
  for (int i = 0; i < d.dim(); ++i)
    for (int j = 0; j < d.dim(); ++j) {
      const auto p = product(unflatten(d.basis_vector(i)), unflatten(d.basis_vector(j)));
      if (!p.is_zero()) note(rep.delta_delta_zero, i, j, "Delta.Delta=0");
    }
  for (int i = 0; i < d.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j) {
      const auto p = product(unflatten(d.basis_vector(i)), unflatten(w.basis_vector(j)));
      if (!w.contains(flatten(p))) note(rep.delta_w_in_w, i, j, "Delta.W in W");
    }
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j) {
      const auto p = product(unflatten(w.basis_vector(i)), unflatten(w.basis_vector(j)));
      if (!d.contains(flatten(p))) note(rep.w_w_in_delta, i, j, "W.W in Delta");
    }
  for (int i = 0; i < dim(); ++i) {
    const NahmElement b = basis_element(i);
    const NahmElement pd = proj_delta(b), pw = proj_w(b);
    if (!(pd + pw == b) || !(proj_delta(pd) == pd) || !(proj_w(pw) == pw) ||
        !proj_delta(pw).is_zero())
      note(rep.projectors_ok, i, i, "projector identities");
  }
  if (d.sum(w).dim() != dim() || d.intersect(w).dim() != 0)
    note(rep.projectors_ok, -1, -1, "A = Delta (+) W");
  return rep;
}

Subspace triple_span(const NahmAlgebra& a, const Subspace& m1, const Subspace& m2,
                     const Subspace& m3) {
  const int n = a.n();
  if (m1.ambient() != n || m2.ambient() != n || m3.ambient() != n)
    throw std::invalid_argument("triple_span: ambient dimension mismatch");
  std::vector<Vec> gens;
  auto add_slot = [&](const Subspace& m, int slot) {
    for (int r = 0; r < m.dim(); ++r) {
      Vec v(3 * n);
      const Vec b = m.basis_vector(r);
      for (int k = 0; k < n; ++k) v[slot * n + k] = b[k];
      gens.push_back(std::move(v));
    }
  };
  add_slot(m1, 0);
  add_slot(m2, 1);
  add_slot(m3, 2);
  return Subspace::span(3 * n, gens);
}

std::array<GradingPair, 3> NahmAlgebra::induced_gradings(const Subspace& g0,
                                                         const Subspace& g1) const {
  if (g0.ambient() != n() || g1.ambient() != n())
    throw std::invalid_argument("induced_gradings: ambient dimension mismatch");
  auto bracket_in = [&](const Subspace& s, const Subspace& t, const Subspace& target) {
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < t.dim(); ++j)
        if (!target.contains(base_.bracket(s.basis_vector(i), t.basis_vector(j)))) return false;
    return true;
  };
  if (!bracket_in(g0, g0, g0))
    throw std::invalid_argument("induced_gradings: g0 is not a subalgebra");
  if (!bracket_in(g0, g1, g1))
    throw std::invalid_argument("induced_gradings: [g0,g1] not contained in g1");
  if (!bracket_in(g1, g1, g0))
    throw std::invalid_argument("induced_gradings: [g1,g1] not contained in g0");
  if (g0.sum(g1).dim() != n() || g0.intersect(g1).dim() != 0)
    throw std::invalid_argument("induced_gradings: g is not the direct sum g0 (+) g1");

  const NahmAlgebra& a = *this;
  std::array<GradingPair, 3> out = {
      GradingPair{triple_span(a, g0, g1, g1), triple_span(a, g1, g0, g0)},
      GradingPair{triple_span(a, g1, g0, g1), triple_span(a, g0, g1, g0)},
      GradingPair{triple_span(a, g1, g1, g0), triple_span(a, g0, g0, g1)},
  };
  // Verify the grading laws on each pair.
  auto product_in = [&](const Subspace& s, const Subspace& t, const Subspace& target) {
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < t.dim(); ++j) {
        const auto p = product(unflatten(s.basis_vector(i)), unflatten(t.basis_vector(j)));
        if (!target.contains(flatten(p))) return false;
      }
    return true;
  };
  for (const auto& [even, odd] : out) {
    if (even.sum(odd).dim() != dim() || even.intersect(odd).dim() != 0)
      throw std::logic_error("induced_gradings: even/odd pair is not a direct sum");
    if (!product_in(even, even, even) || !product_in(even, odd, odd) ||
        !product_in(odd, odd, even))
      throw std::logic_error("induced_gradings: grading laws fail");
  }
  return out;
}

BilinearForm NahmAlgebra::trace_form_nahm(const Representation& rep) const {
  if (rep.algebra().dim() != n())
    throw std::invalid_argument("trace_form_nahm: representation over a different base");
  const BilinearForm b = trace_form(rep);
  Mat shortcut(dim(), dim());
  const Rat mhalf(-1, 2);
  for (int s = 0; s < 3; ++s)
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        shortcut.at(s * n() + i, s * n() + j) = mhalf * b.gram().at(i, j);

  // Cross-check the trace definition against the blockdiag shortcut.
  std::vector<Mat> lrho;
  lrho.reserve(dim());
  for (int i = 0; i < dim(); ++i) lrho.push_back(l_rho(rep, basis_element(i)));
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j) {
      Rat tr;
      const Mat &a = lrho[i], &c = lrho[j];
      for (int p = 0; p < a.rows(); ++p)
        for (int q = 0; q < a.cols(); ++q)
          if (!a.at(p, q).is_zero() && !c.at(q, p).is_zero()) tr += a.at(p, q) * c.at(q, p);
      if (tr != shortcut.at(i, j))
        throw std::logic_error("trace_form_nahm: trace definition disagrees with blockdiag form");
    }
  return BilinearForm(std::move(shortcut));
}

BilinearForm NahmAlgebra::standard_form() const {
  return trace_form_nahm(Representation::adjoint(base_));
}

Subspace NahmAlgebra::form_radical(const Representation& rep) const {
  const Subspace rad = trace_form_nahm(rep).radical();
  const Subspace base_rad = trace_form(rep).radical();
  if (rad != triple_span(*this, base_rad, base_rad, base_rad))
    throw std::logic_error("form_radical: rad C_rho differs from (rad B_rho)^3");
  return rad;
}

bool NahmAlgebra::is_compact() const {
  if (!base_.is_semisimple()) throw std::invalid_argument("is_compact: base is not semisimple");
  const bool pd = standard_form().definiteness() == Definiteness::positive_definite;
  const bool kappa_nd =
      base_.killing().definiteness() == Definiteness::negative_definite;
  if (pd != kappa_nd) throw std::logic_error("is_compact: C and kappa definiteness disagree");
  return pd;
}

Mat lift_hom(const LieAlgebra& src, const LieAlgebra& dst, const Mat& phi) {
  if (phi.rows() != dst.dim() || phi.cols() != src.dim())
    throw std::invalid_argument("lift_hom: phi has wrong shape");
  for (int i = 0; i < src.dim(); ++i)
    for (int j = i + 1; j < src.dim(); ++j) {
      const Vec lhs = phi.mul_vec(src.bracket(src.basis_vector(i), src.basis_vector(j)));
      const Vec rhs = dst.bracket(phi.col(i), phi.col(j));
      if (lhs != rhs)
        throw std::invalid_argument("lift_hom: phi is not a Lie homomorphism at pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  Mat m(3 * dst.dim(), 3 * src.dim());
  for (int s = 0; s < 3; ++s) m.set_block(s * dst.dim(), s * src.dim(), phi);
  return m;
}

Mat blockwise(const Mat& t3, int n) {
  if (t3.rows() != 3 || t3.cols() != 3) throw std::invalid_argument("blockwise: need a 3x3 matrix");
  Mat m(3 * n, 3 * n);
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t)
      if (!t3.at(s, t).is_zero())
        for (int k = 0; k < n; ++k) m.at(s * n + k, t * n + k) = t3.at(s, t);
  return m;
}

}  // namespace nahm
