#pragma once

#include "nahm/lie_algebra.hpp"
#include "nahm/numeric.hpp"

namespace nahm {

/// Binary64 view of A(g). Structure constants are converted to double once;
/// all exact predicates stay in the rational modules.
class DoubleSystem {
 public:
  explicit DoubleSystem(const LieAlgebra& g);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int dim() const { return 3 * n_; }

  [[nodiscard]] std::vector<double> bracket(const double* x, const double* y) const;
  /// Product and square on flattened (x1 | x2 | x3) coordinates.
  [[nodiscard]] std::vector<double> product(const std::vector<double>& x,
                                            const std::vector<double>& y) const;
  [[nodiscard]] std::vector<double> square(const std::vector<double>& x) const;
  [[nodiscard]] DMat left_mult(const std::vector<double>& x) const;

 private:
  [[nodiscard]] double c(int i, int j, int k) const {
    return c_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
  }
  int n_;
  std::vector<double> c_;
};

}  // namespace nahm
