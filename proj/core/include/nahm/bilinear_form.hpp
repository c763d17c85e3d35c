#pragma once

#include <array>

#include "nahm/subspace.hpp"

namespace nahm {

enum class Definiteness { positive_definite, negative_definite, indefinite_or_semidefinite };

/// Symmetric bilinear form given by its exact Gram matrix.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Mat gram);

  [[nodiscard]] int dim() const { return gram_.rows(); }
  [[nodiscard]] const Mat& gram() const { return gram_; }

  [[nodiscard]] Rat eval(const Vec& x, const Vec& y) const;
  [[nodiscard]] Subspace radical() const { return nullspace(gram_); }
  [[nodiscard]] bool is_nondegenerate() const { return radical().is_zero(); }

  /// Sylvester criterion on leading principal minors; any zero minor reports
  /// indefinite_or_semidefinite.
  [[nodiscard]] Definiteness definiteness() const;

  /// (positive, negative, zero) inertia via exact congruence diagonalization.
  [[nodiscard]] std::array<int, 3> signature() const;

 private:
  Mat gram_;
};

}  // namespace nahm
