#pragma once

#include "nahm/lie_algebra.hpp"

namespace nahm {

/// Element of A(g): an ordered triple of g-vectors. The flattened coordinate
/// order everywhere in the library is the concatenation (x1 | x2 | x3).
struct NahmElement {
  Vec x1, x2, x3;

  friend bool operator==(const NahmElement&, const NahmElement&) = default;
  [[nodiscard]] bool is_zero() const {
    return vec_is_zero(x1) && vec_is_zero(x2) && vec_is_zero(x3);
  }
};

NahmElement operator+(const NahmElement& a, const NahmElement& b);
NahmElement operator-(const NahmElement& a, const NahmElement& b);
NahmElement operator*(const Rat& s, const NahmElement& x);

struct GradingCheck {
  bool delta_delta_zero = true;   // D(g) . D(g) = 0
  bool delta_w_in_w = true;       // D(g) . W(g) inside W(g)
  bool w_w_in_delta = true;       // W(g) . W(g) inside D(g)
  bool projectors_ok = true;      // P_D + P_W = id, both idempotent
  std::string witness;            // first failing pair, if any
  [[nodiscard]] bool pass() const {
    return delta_delta_zero && delta_w_in_w && w_w_in_delta && projectors_ok;
  }
};

struct GradingPair {
  Subspace even;  // subalgebra
  Subspace odd;
};

/// The commutative nonassociative algebra A(g) on g x g x g whose square map
/// is the right-hand side of the Nahm equations.
class NahmAlgebra {
 public:
  explicit NahmAlgebra(LieAlgebra base);

  [[nodiscard]] const LieAlgebra& base() const { return base_; }
  [[nodiscard]] int n() const { return base_.dim(); }
  [[nodiscard]] int dim() const { return 3 * base_.dim(); }

  [[nodiscard]] Vec flatten(const NahmElement& x) const;
  [[nodiscard]] NahmElement unflatten(const Vec& v) const;
  [[nodiscard]] NahmElement basis_element(int i) const;  // i in [0, 3n)
  [[nodiscard]] NahmElement zero_element() const;

  /// X.Y = 1/2 ([x2,y3]+[y2,x3] | [x3,y1]+[y3,x1] | [x1,y2]+[y1,x2]).
  [[nodiscard]] NahmElement product(const NahmElement& x, const NahmElement& y) const;
  [[nodiscard]] NahmElement square(const NahmElement& x) const;

  /// Block matrix of the left multiplication operator L(X).
  [[nodiscard]] Mat left_mult(const NahmElement& x) const;
  /// L_rho(X): the same block pattern with rho(x_i) in place of ad x_i.
  [[nodiscard]] Mat l_rho(const Representation& rep, const NahmElement& x) const;

  [[nodiscard]] NahmElement delta(const Vec& x) const;
  [[nodiscard]] NahmElement proj_delta(const NahmElement& x) const;
  [[nodiscard]] NahmElement proj_w(const NahmElement& x) const;
  [[nodiscard]] Subspace delta_subspace() const;
  [[nodiscard]] Subspace w_subspace() const;

  [[nodiscard]] GradingCheck grading_check() const;

  /// The three Z2-gradings of A(g) induced by a Z2-grading g = g0 + g1.
  /// Inputs are verified: g0 subalgebra, [g0,g1] in g1, [g1,g1] in g0,
  /// g = g0 (+) g1.
  [[nodiscard]] std::array<GradingPair, 3> induced_gradings(const Subspace& g0,
                                                            const Subspace& g1) const;

  /// C_rho. Computes both the trace definition tr(L_rho(X) L_rho(Y)) and the
  /// shortcut -1/2 blockdiag(B_rho), asserts they agree, returns the result.
  [[nodiscard]] BilinearForm trace_form_nahm(const Representation& rep) const;
  /// The standard form C = C_ad.
  [[nodiscard]] BilinearForm standard_form() const;
  /// rad C_rho, verified equal to rad B_rho x rad B_rho x rad B_rho.
  [[nodiscard]] Subspace form_radical(const Representation& rep) const;

  /// Requires a semisimple base; true iff the standard form is positive
  /// definite (equivalently the Killing form is negative definite).
  [[nodiscard]] bool is_compact() const;

 private:
  LieAlgebra base_;
};

/// Triple product subspace m1 x m2 x m3 inside A(g), as a flat 3n subspace.
Subspace triple_span(const NahmAlgebra& a, const Subspace& m1, const Subspace& m2,
                     const Subspace& m3);

/// Verifies phi intertwines brackets on all basis pairs, then lifts it to the
/// block-diagonal map diag(phi, phi, phi) : A(src) -> A(dst).
Mat lift_hom(const LieAlgebra& src, const LieAlgebra& dst, const Mat& phi);

/// 3n x 3n matrix of a formal 3x3 matrix acting on column triples, i.e.
/// t3 (x) I_n in the (x1 | x2 | x3) coordinate order.
Mat blockwise(const Mat& t3, int n);

}  // namespace nahm
