#pragma once

#include <string>

#include "nahm/bilinear_form.hpp"

namespace nahm {

struct ValidationReport {
  bool antisymmetry_ok = true;
  bool jacobi_ok = true;
  // (i, j, k) triples where c[i][j][k] != -c[j][i][k].
  std::vector<std::array<int, 3>> antisymmetry_failures;
  // (i, j, k, l) quadruples with nonzero Jacobi residual.
  std::vector<std::array<int, 4>> jacobi_failures;
  [[nodiscard]] bool ok() const { return antisymmetry_ok && jacobi_ok; }
};

struct DerivedSeries {
  std::vector<Subspace> terms;  // g  >  [g,g]  >  ... until stabilization
  bool solvable = false;
};

struct SimplicityReport {
  bool derived_nonzero = false;
  bool semisimple = false;
  int centralizer_dim = 0;
  bool centralizer_test = false;  // derived_nonzero && semisimple && centralizer_dim == 1
  bool closure_test = false;      // every basis vector generates g as an ideal
  bool agree = false;
  // The centralizer test can misclassify simple algebras of complex type over
  // the rationals; on disagreement the closure test is authoritative and the
  // diagnostic flag is raised for callers to surface.
  [[nodiscard]] bool simple() const { return agree ? centralizer_test : closure_test; }
  [[nodiscard]] bool diagnostic() const { return !agree; }
};

/// Lie algebra over the rationals, presented by structure constants in a
/// fixed basis: [b_i, b_j] = sum_k c[i][j][k] b_k.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, int dim);
  /// Raw tensor constructor; the invariants are checked by validate(), not
  /// enforced here, so diagnostic paths can be exercised.
  LieAlgebra(std::string name, int dim, std::vector<Rat> tensor);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] int dim() const { return n_; }

  [[nodiscard]] const Rat& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }
  /// Sets c[i][j][k] and c[j][i][k] = -c[i][j][k] together.
  void set_bracket_coeff(int i, int j, int k, const Rat& v);

  [[nodiscard]] ValidationReport validate() const;
  void require_valid() const;  // throws std::invalid_argument when validate() fails

  [[nodiscard]] Vec bracket(const Vec& x, const Vec& y) const;
  [[nodiscard]] Mat ad(const Vec& x) const;
  [[nodiscard]] Vec basis_vector(int i) const;

  [[nodiscard]] BilinearForm killing() const;
  [[nodiscard]] Subspace derived_algebra() const;
  [[nodiscard]] DerivedSeries derived_series() const;
  [[nodiscard]] bool is_solvable() const { return derived_series().solvable; }

  /// Maximal solvable ideal, computed as the Killing-orthogonal complement of
  /// [g,g] (characteristic zero) and post-verified to be a solvable ideal.
  [[nodiscard]] Subspace radical() const;
  [[nodiscard]] bool is_semisimple() const;

  /// Smallest ad-invariant subspace containing the seed vectors.
  [[nodiscard]] Subspace ideal_closure(const std::vector<Vec>& seed) const;

  [[nodiscard]] SimplicityReport simplicity() const;
  [[nodiscard]] bool is_simple() const { return simplicity().simple(); }

  /// Span of brackets [x, S] for all basis x; helper for closure iterations.
  [[nodiscard]] Subspace bracket_span(const Subspace& a, const Subspace& b) const;

 private:
  [[nodiscard]] size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * n_ + j) * n_ + k;
  }
  std::string name_;
  int n_;
  std::vector<Rat> c_;
};

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Finite-dimensional representation rho: g -> gl(V), validated to satisfy
/// rho([b_i,b_j]) = rho(b_i)rho(b_j) - rho(b_j)rho(b_i) on construction.
class Representation {
 public:
  static Representation make(LieAlgebra g, std::vector<Mat> rho);
  static Representation adjoint(const LieAlgebra& g);
  static Representation zero(const LieAlgebra& g, int space_dim);

  [[nodiscard]] const LieAlgebra& algebra() const { return g_; }
  [[nodiscard]] int space_dim() const { return space_dim_; }
  [[nodiscard]] const Mat& rho_basis(int i) const { return rho_[i]; }
  [[nodiscard]] Mat rho(const Vec& x) const;

 private:
  Representation(LieAlgebra g, int space_dim, std::vector<Mat> rho)
      : g_(std::move(g)), space_dim_(space_dim), rho_(std::move(rho)) {}
  LieAlgebra g_;
  int space_dim_;
  std::vector<Mat> rho_;
};

/// B_rho(x, y) = tr(rho(x) rho(y)).
BilinearForm trace_form(const Representation& rep);

}  // namespace nahm
