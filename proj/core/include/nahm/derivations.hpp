#pragma once

#include "nahm/nahm_algebra.hpp"
#include "nahm/numeric.hpp"

namespace nahm {

/// Leibniz identity D(XY) = (DX)Y + X(DY), checked exactly on all basis pairs.
bool is_derivation(const NahmAlgebra& a, const Mat& t);

/// Der(A(g)) as a subspace of the (3n)^2-dimensional operator space
/// (row-major vectorization). Assembled as one exact linear system from the
/// Leibniz identity on unordered basis pairs; the result is post-verified to
/// be commutator-closed and to contain diag(ad g) and the so(3) action.
Subspace derivation_algebra(const NahmAlgebra& a);

/// diag(ad x): block-diagonal action of ad x on each slot.
Mat diag_ad(const NahmAlgebra& a, const Vec& x);
/// Blockwise action of a skew-symmetric 3x3 matrix on column triples.
Mat so3_action(const NahmAlgebra& a, const Mat& skew3);

/// Diagonal and off-diagonal block parts of a 3n x 3n operator.
Mat t_diag_part(const Mat& t, int n);
Mat t_off_part(const Mat& t, int n);

struct DecompositionReport {
  int der_dim = 0;
  int expected_dim = 0;  // dim g + 3
  bool dims_match = false;
  bool span_equal = false;  // span(diag(ad g), so(3)) == Der(A) canonically
  [[nodiscard]] bool pass() const { return dims_match && span_equal; }
};
/// Der(A(g)) = diag(ad g) (+) so(3) for simple A(g); precondition checked.
DecompositionReport decomposition_check(const NahmAlgebra& a);

/// Centralizer of all left multiplications {L(B_i)} in the operator space.
Subspace schur_centralizer(const NahmAlgebra& a);

struct CTransposeResult {
  Mat tc;                    // C-transpose: C(T^c X, Y) = C(X, T Y)
  std::optional<Rat> lambda; // set when T + T^c is an exact scalar lambda I
};
/// Requires a nondegenerate standard form.
CTransposeResult c_transpose(const NahmAlgebra& a, const Mat& t);

/// Invertible and multiplicative on all basis pairs.
bool is_automorphism(const NahmAlgebra& a, const Mat& f);

struct GradingAutomorphism {
  Mat u;               // exact 3x3 involution defining the Delta/W grading
  DMat g;              // 3x3 derivation with exp(g) = u
  double exp_error;    // ||exp(g) - u||_inf
};
GradingAutomorphism grading_automorphism(const NahmAlgebra& a);

struct AutFactorization {
  bool ok = false;
  Mat phi;     // n x n automorphism of g
  Mat r;       // 3 x 3 rotation, exact
  std::string error;
};
/// Factors a verified automorphism of a simple A(g) as diag(phi) o blockwise(R)
/// by conjugating the so(3) component of Der(A(g)); exact reconstruction is
/// verified before returning.
AutFactorization aut_factorization(const NahmAlgebra& a, const Mat& f);

}  // namespace nahm
