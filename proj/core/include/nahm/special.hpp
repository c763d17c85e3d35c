#pragma once

#include <cstdint>

#include "nahm/nahm_algebra.hpp"

namespace nahm {

/// Ordered triple in g satisfying [e_i, e_{i+1}] = e_{i+2} (indices mod 3)
/// with linearly independent components; the data of an idempotent of A(g).
struct So3Triple {
  Vec e1, e2, e3;
};
/// Validates the relations and independence; throws when violated.
So3Triple make_so3_triple(const LieAlgebra& g, Vec e1, Vec e2, Vec e3);

struct NilpotencyReport {
  bool nilpotent = false;        // square(N) == 0
  bool is_zero_element = false;
  bool components_commute = false;      // [n_i, n_j] = 0 for all i, j
  bool triple_span_abelian = false;     // K n1 x K n2 x K n3 abelian subalgebra
};
NilpotencyReport is_nilpotent(const NahmAlgebra& a, const NahmElement& x);

/// Nonzero E with E^2 = E. When true, the component triple is additionally
/// asserted nonzero and linearly independent (a consequence that holds for
/// every idempotent of a Nahm algebra).
bool is_idempotent(const NahmAlgebra& a, const NahmElement& e);

NahmElement idempotent_from_so3(const NahmAlgebra& a, const So3Triple& t);

struct NewtonResult {
  bool converged = false;
  std::vector<double> x;     // 3n coordinates
  double residual = 0.0;     // ||X^2 - X||_inf at exit
  int iterations = 0;
  std::string failure;       // "max_iter" or "divergence" when not converged
};

/// Damped Newton iteration on F(X) = X^2 - X with Jacobian 2 L(X) - I.
/// Falls back to a Tikhonov-damped least-squares step when the Jacobian is
/// singular; halves the step up to 30 times on residual increase.
NewtonResult find_idempotent(const NahmAlgebra& a, std::vector<double> x0, double tol,
                             int max_iter);
NewtonResult find_idempotent_random(const NahmAlgebra& a, std::uint64_t seed, double tol,
                                    int max_iter);

/// Continued-fraction rationalization (denominator bound) of a numeric point,
/// re-checked exactly; nullopt when the rounded element is not an exact
/// idempotent.
std::optional<NahmElement> exactify_idempotent(const NahmAlgebra& a,
                                               const std::vector<double>& x,
                                               long max_den = 1000000);

struct PowerAssocWitness {
  NahmElement x;
  NahmElement left;   // ((X^2) X) X
  NahmElement right;  // (X^2)(X^2)
};

/// Deterministic search (basis elements, then b_i +/- b_j slot patterns) for
/// an element whose two fourth powers differ; nullopt when the search space
/// is exhausted.
std::optional<PowerAssocWitness> power_assoc_witness(const NahmAlgebra& a);

}  // namespace nahm
