#include "nahm/derivations.hpp"

#include <cmath>

#include "nahm/numeric.hpp"
#include "nahm/structure.hpp"

namespace nahm {

namespace {

/// hat(e_k): the so(3) basis aligned with the cross-product identification,
/// so that conjugation R hat(v) R^t = hat(R v) reads off rotation columns.
Mat hat_basis(int k) {
  Mat w(3, 3);
  const int i = (k + 1) % 3, j = (k + 2) % 3;
  w.at(j, i) = Rat(1);
  w.at(i, j) = Rat(-1);
  return w;
}

Vec vee(const Mat& m) { return {m.at(2, 1), m.at(0, 2), m.at(1, 0)}; }

bool is_skew3(const Mat& m) {
  if (m.rows() != 3 || m.cols() != 3) return false;
  return (m + m.transpose()).is_zero();
}

}  // namespace

bool is_derivation(const NahmAlgebra& a, const Mat& t) {
  if (t.rows() != a.dim() || t.cols() != a.dim())
    throw std::invalid_argument("is_derivation: operator shape mismatch");
  const int d = a.dim();
  std::vector<NahmElement> basis, t_basis;
  for (int i = 0; i < d; ++i) {
    basis.push_back(a.basis_element(i));
    t_basis.push_back(a.unflatten(t.col(i)));
  }
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const NahmElement lhs = a.unflatten(t.mul_vec(a.flatten(a.product(basis[i], basis[j]))));
      const NahmElement rhs = a.product(t_basis[i], basis[j]) + a.product(basis[i], t_basis[j]);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

Subspace derivation_algebra(const NahmAlgebra& a) {
  const int d = a.dim();
  std::vector<Mat> lmult;
  lmult.reserve(d);
  for (int i = 0; i < d; ++i) lmult.push_back(a.left_mult(a.basis_element(i)));
  // Unknowns: entries of T, row-major. For each unordered basis pair (i, j)
  // and output coordinate k:
  //   sum_m T[k][m] (B_i B_j)[m] - sum_m L(B_j)[k][m] T[m][i]
  //                               - sum_m L(B_i)[k][m] T[m][j] = 0.
  EchelonSet rows(d * d);
  Vec row(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const Vec p = lmult[i].col(j);  // coordinates of B_i B_j
      for (int k = 0; k < d; ++k) {
        std::fill(row.begin(), row.end(), Rat(0));
        bool nonzero = false;
        for (int m = 0; m < d; ++m) {
          if (!p[m].is_zero()) {
            row[static_cast<size_t>(k) * d + m] += p[m];
            nonzero = true;
          }
          if (!lmult[j].at(k, m).is_zero()) {
            row[static_cast<size_t>(m) * d + i] -= lmult[j].at(k, m);
            nonzero = true;
          }
          if (!lmult[i].at(k, m).is_zero()) {
            row[static_cast<size_t>(m) * d + j] -= lmult[i].at(k, m);
            nonzero = true;
          }
        }
        if (nonzero) rows.insert(row);
      }
    }
  const Subspace der = rows.dim() == 0 ? Subspace::full(d * d) : nullspace(rows.to_rref());

  // Post-verification.
  for (int r = 0; r < der.dim(); ++r)
    if (!is_derivation(a, Mat::from_vector(der.basis_vector(r), d, d)))
      throw std::logic_error("derivation_algebra: basis element fails the Leibniz identity");
  for (int r = 0; r < der.dim(); ++r)
    for (int s = r + 1; s < der.dim(); ++s) {
      const Mat x = Mat::from_vector(der.basis_vector(r), d, d);
      const Mat y = Mat::from_vector(der.basis_vector(s), d, d);
      if (!der.contains((x * y - y * x).vectorize()))
        throw std::logic_error("derivation_algebra: not closed under commutator");
    }
  for (int i = 0; i < a.n(); ++i)
    if (!der.contains(diag_ad(a, a.base().basis_vector(i)).vectorize()))
      throw std::logic_error("derivation_algebra: missing diag(ad g)");
  for (int k = 0; k < 3; ++k)
    if (!der.contains(so3_action(a, hat_basis(k)).vectorize()))
      throw std::logic_error("derivation_algebra: missing the so(3) action");
  return der;
}

Mat diag_ad(const NahmAlgebra& a, const Vec& x) {
  const Mat adx = a.base().ad(x);
  Mat m(a.dim(), a.dim());
  for (int s = 0; s < 3; ++s) m.set_block(s * a.n(), s * a.n(), adx);
  return m;
}

Mat so3_action(const NahmAlgebra& a, const Mat& skew3) {
  if (!is_skew3(skew3)) throw std::invalid_argument("so3_action: matrix is not 3x3 skew-symmetric");
  return blockwise(skew3, a.n());
}

Mat t_diag_part(const Mat& t, int n) {
  Mat m(3 * n, 3 * n);
  for (int s = 0; s < 3; ++s) m.set_block(s * n, s * n, t.block(s * n, s * n, n, n));
  return m;
}

Mat t_off_part(const Mat& t, int n) {
  Mat m = t;
  return m - t_diag_part(t, n);
}

DecompositionReport decomposition_check(const NahmAlgebra& a) {
  if (!is_simple_nahm(a))
    throw std::invalid_argument("decomposition_check: A(g) is not simple");
  DecompositionReport rep;
  const Subspace der = derivation_algebra(a);
  rep.der_dim = der.dim();
  rep.expected_dim = a.n() + 3;
  rep.dims_match = rep.der_dim == rep.expected_dim;
  std::vector<Vec> gens;
  for (int i = 0; i < a.n(); ++i) gens.push_back(diag_ad(a, a.base().basis_vector(i)).vectorize());
  for (int k = 0; k < 3; ++k) gens.push_back(so3_action(a, hat_basis(k)).vectorize());
  rep.span_equal = Subspace::span(a.dim() * a.dim(), gens) == der;
  return rep;
}

Subspace schur_centralizer(const NahmAlgebra& a) {
  std::vector<Mat> lmult;
  lmult.reserve(a.dim());
  for (int i = 0; i < a.dim(); ++i) lmult.push_back(a.left_mult(a.basis_element(i)));
  return centralizer(lmult, a.dim());
}

CTransposeResult c_transpose(const NahmAlgebra& a, const Mat& t) {
  const BilinearForm c = a.standard_form();
  const auto ginv = inverse(c.gram());
  if (!ginv) throw std::invalid_argument("c_transpose: standard form is degenerate");
  CTransposeResult out;
  out.tc = *ginv * t.transpose() * c.gram();
  const Mat s = t + out.tc;
  const Rat lambda = s.at(0, 0);
  if (s == lambda * Mat::identity(s.rows())) out.lambda = lambda;
  return out;
}

bool is_automorphism(const NahmAlgebra& a, const Mat& f) {
  if (f.rows() != a.dim() || f.cols() != a.dim())
    throw std::invalid_argument("is_automorphism: operator shape mismatch");
  if (rank(f) != a.dim()) return false;
  const int d = a.dim();
  std::vector<NahmElement> basis, f_basis;
  for (int i = 0; i < d; ++i) {
    basis.push_back(a.basis_element(i));
    f_basis.push_back(a.unflatten(f.col(i)));
  }
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const NahmElement lhs = a.unflatten(f.mul_vec(a.flatten(a.product(basis[i], basis[j]))));
      const NahmElement rhs = a.product(f_basis[i], f_basis[j]);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

GradingAutomorphism grading_automorphism(const NahmAlgebra& a) {
  GradingAutomorphism out;
  out.u = Mat(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.u.at(i, j) = (i == j) ? Rat(-1, 3) : Rat(2, 3);

  if (!(out.u * out.u.transpose()).is_identity() || determinant(out.u) != Rat(1))
    throw std::logic_error("grading_automorphism: U is not special orthogonal");
  if (!(out.u * out.u).is_identity())
    throw std::logic_error("grading_automorphism: U is not an involution");
  const Mat ub = blockwise(out.u, a.n());
  for (int i = 0; i < a.dim(); ++i) {
    const NahmElement b = a.basis_element(i);
    const Vec expected = a.flatten(a.proj_delta(b) - a.proj_w(b));
    if (ub.col(i) != expected)
      throw std::logic_error("grading_automorphism: U differs from P_Delta - P_W");
  }
  if (!is_automorphism(a, ub))
    throw std::logic_error("grading_automorphism: blockwise U is not an automorphism");

  const double w = M_PI / std::sqrt(3.0);
  out.g = DMat(3, 3);
  out.g.at(0, 1) = w;  out.g.at(0, 2) = -w;
  out.g.at(1, 0) = -w; out.g.at(1, 2) = w;
  out.g.at(2, 0) = w;  out.g.at(2, 1) = -w;
  const DMat eg = mat_exp(out.g);
  double err = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      err = std::max(err, std::abs(eg.at(i, j) - out.u.at(i, j).to_double()));
  out.exp_error = err;
  return out;
}

AutFactorization aut_factorization(const NahmAlgebra& a, const Mat& f) {
  AutFactorization out;
  if (!is_simple_nahm(a)) {
    out.error = "A(g) is not simple";
    return out;
  }
  if (!is_automorphism(a, f)) {
    out.error = "input is not an automorphism";
    return out;
  }
  const auto finv = inverse(f);
  const int n = a.n();
  // Conjugate the so(3) component: F so3_action(hat e_k) F^{-1} must again be
  // a blockwise skew action, and its vee is the k-th column of the rotation.
  Mat r(3, 3);
  for (int k = 0; k < 3; ++k) {
    const Mat conj = f * so3_action(a, hat_basis(k)) * (*finv);
    Mat m3(3, 3);
    for (int s = 0; s < 3; ++s)
      for (int t = 0; t < 3; ++t) {
        const Rat scalar = conj.at(s * n, t * n);
        Mat block = conj.block(s * n, t * n, n, n);
        if (block != scalar * Mat::identity(n)) {
          out.error = "conjugation does not preserve the so(3) component";
          return out;
        }
        m3.at(s, t) = scalar;
      }
    if (!is_skew3(m3)) {
      out.error = "conjugated so(3) generator is not skew";
      return out;
    }
    const Vec col = vee(m3);
    for (int i = 0; i < 3; ++i) r.at(i, k) = col[i];
  }
  if (!(r * r.transpose()).is_identity() || determinant(r) != Rat(1)) {
    out.error = "recovered rotation is not special orthogonal";
    return out;
  }
  // Split off the rotation; the rest must be diag(phi) with phi in Aut(g).
  const Mat d = f * blockwise(r.transpose(), n);
  const Mat phi = d.block(0, 0, n, n);
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) {
      const Mat block = d.block(s * n, t * n, n, n);
      if (s == t ? !(block == phi) : !block.is_zero()) {
        out.error = "residual factor is not block-diagonal";
        return out;
      }
    }
  const LieAlgebra& g = a.base();
  if (!inverse(phi)) {
    out.error = "recovered phi is singular";
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (phi.mul_vec(g.bracket(g.basis_vector(i), g.basis_vector(j))) !=
          g.bracket(phi.col(i), phi.col(j))) {
        out.error = "recovered phi is not an automorphism of g";
        return out;
      }
  Mat diag_phi(a.dim(), a.dim());
  for (int s = 0; s < 3; ++s) diag_phi.set_block(s * n, s * n, phi);
  if (!(diag_phi * blockwise(r, n) == f)) {
    out.error = "reconstruction diag(phi) o R != F";
    return out;
  }
  out.ok = true;
  out.phi = phi;
  out.r = r;
  return out;
}

}  // namespace nahm
