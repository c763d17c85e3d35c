#pragma once

#include "nahm/nahm_algebra.hpp"

namespace nahm {

/// Triple-product subspace M = m1 x m2 x m3 of A(g).
struct TripleSubspace {
  Subspace m1, m2, m3;
};

/// M is a subalgebra iff [m_i, m_{i+1}] lies in m_{i+2} (indices mod 3).
bool is_subalgebra_triple(const NahmAlgebra& a, const TripleSubspace& m);

/// J = h1 x h2 x h3 is an ideal iff [g, h_i] lies in h_{i+1} cap h_{i+2}.
bool is_ideal_triple(const NahmAlgebra& a, const TripleSubspace& j);

/// Ideal test for an arbitrary 3n-dimensional subspace of A(g).
bool is_ideal_general(const NahmAlgebra& a, const Subspace& s);

struct IdealProjections {
  Subspace h1, h2, h3;
  Subspace intersection;       // h1 cap h2 cap h3, an ideal of g
  bool inclusions_ok = false;  // [g, h_i] inside h_{i+1} cap h_{i+2}
  bool intersection_is_ideal = false;
};
/// Projections pi_i of an ideal of A(g), with the bracket inclusions and the
/// triple intersection verified. Throws when s is not an ideal.
IdealProjections projections_of_ideal(const NahmAlgebra& a, const Subspace& s);

struct GeneratedSubalgebra {
  /// Span of the principal powers P, P^2, P^2 P, (P^2 P) P, ...
  Subspace principal_span;
  /// Fixed point of pairwise products of a growing basis; product-closed and
  /// contains the principal span. The confinement monitor uses this one.
  Subspace closure;
};
GeneratedSubalgebra subalgebra_generated(const NahmAlgebra& a, const NahmElement& p);

/// Simplicity transfers from the base algebra. Cross-validated against ideal
/// closures inside A(g); disagreement throws (it would indicate a bug).
bool is_simple_nahm(const NahmAlgebra& a);

/// Computed both from the base Killing form and from nondegeneracy of the
/// standard form; the two must agree.
bool is_semisimple_nahm(const NahmAlgebra& a);

/// rad A(g) = rad g x rad g x rad g, verified to be an ideal with semisimple
/// quotient base.
Subspace radical_nahm(const NahmAlgebra& a);

/// Quotient of g by its radical, with structure constants recomputed on the
/// complement spanned by the non-pivot coordinates of the radical basis.
LieAlgebra quotient_by_radical(const LieAlgebra& g);

struct LeviReport {
  bool s_is_subalgebra = false;
  bool s_is_semisimple = false;
  bool direct_sum_ok = false;  // g = s (+) rad g as vector spaces
  Subspace levi;               // span of the supplied basis
  Subspace radical;            // rad g
  Subspace nahm_levi;          // A(s) inside A(g)
  Subspace nahm_radical;       // rad A(g)
  [[nodiscard]] bool pass() const { return s_is_subalgebra && s_is_semisimple && direct_sum_ok; }
};
/// Verifies a supplied Levi factor and reports the induced decomposition
/// A(g) = A(s) (+) rad A(g).
LeviReport verify_levi(const NahmAlgebra& a, const std::vector<Vec>& s_basis);

/// Smallest subspace of A(g) containing the seed and closed under product
/// with every basis element of A(g).
Subspace ideal_closure_nahm(const NahmAlgebra& a, const Subspace& seed);

}  // namespace nahm
