#pragma once

#include "nahm/matrix.hpp"

namespace nahm {

/// Subspace of K^ambient in canonical form: the basis matrix is the RREF of
/// any generating set, so two subspaces are equal iff their bases are
/// entrywise equal. This is the library-wide subspace equality test.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(int ambient, const std::vector<Vec>& generators);
  static Subspace span_rows(const Mat& rows);
  static Subspace zero(int ambient);
  static Subspace full(int ambient);

  [[nodiscard]] int ambient() const { return ambient_; }
  [[nodiscard]] int dim() const { return basis_.rows(); }
  [[nodiscard]] const Mat& basis() const { return basis_; }
  [[nodiscard]] Vec basis_vector(int i) const { return basis_.row(i); }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  [[nodiscard]] bool is_full() const { return dim() == ambient_; }

  /// Residual of v after eliminating all pivot coordinates; zero iff v lies
  /// in the subspace.
  [[nodiscard]] Vec reduce(const Vec& v) const;
  [[nodiscard]] bool contains(const Vec& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;

  /// Coefficients of v in the canonical basis, if v is a member.
  [[nodiscard]] std::optional<Vec> coordinates(const Vec& v) const;

  [[nodiscard]] Subspace sum(const Subspace& other) const;
  [[nodiscard]] Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  int ambient_ = 0;
  Mat basis_;                    // RREF, full row rank
  std::vector<int> pivot_cols_;  // strictly increasing
};

/// Null space {v : m v = 0} in canonical form; dim = cols - rank.
Subspace nullspace(const Mat& m);

/// All operators commuting with every matrix in mats, as a subspace of the
/// k^2-dimensional operator space (row-major vectorization).
Subspace centralizer(const std::vector<Mat>& mats, int k);

}  // namespace nahm
