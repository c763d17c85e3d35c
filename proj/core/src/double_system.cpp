#include "nahm/double_system.hpp"

namespace nahm {

DoubleSystem::DoubleSystem(const LieAlgebra& g)
    : n_(g.dim()), c_(static_cast<size_t>(g.dim()) * g.dim() * g.dim()) {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        c_[(static_cast<size_t>(i) * n_ + j) * n_ + k] = g.c(i, j, k).to_double();
}

std::vector<double> DoubleSystem::bracket(const double* x, const double* y) const {
  std::vector<double> r(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j] == 0.0) continue;
      const double f = x[i] * y[j];
      for (int k = 0; k < n_; ++k) {
        const double cc = c(i, j, k);
        if (cc != 0.0) r[k] += f * cc;
      }
    }
  }
  return r;
}

std::vector<double> DoubleSystem::product(const std::vector<double>& x,
                                          const std::vector<double>& y) const {
  const double *x1 = x.data(), *x2 = x.data() + n_, *x3 = x.data() + 2 * n_;
  const double *y1 = y.data(), *y2 = y.data() + n_, *y3 = y.data() + 2 * n_;
  std::vector<double> r(3 * n_, 0.0);
  const auto a1 = bracket(x2, y3), b1 = bracket(y2, x3);
  const auto a2 = bracket(x3, y1), b2 = bracket(y3, x1);
  const auto a3 = bracket(x1, y2), b3 = bracket(y1, x2);
  for (int k = 0; k < n_; ++k) {
    r[k] = 0.5 * (a1[k] + b1[k]);
    r[n_ + k] = 0.5 * (a2[k] + b2[k]);
    r[2 * n_ + k] = 0.5 * (a3[k] + b3[k]);
  }
  return r;
}

std::vector<double> DoubleSystem::square(const std::vector<double>& x) const {
  const double *x1 = x.data(), *x2 = x.data() + n_, *x3 = x.data() + 2 * n_;
  std::vector<double> r(3 * n_, 0.0);
  const auto r1 = bracket(x2, x3), r2 = bracket(x3, x1), r3 = bracket(x1, x2);
  for (int k = 0; k < n_; ++k) {
    r[k] = r1[k];
    r[n_ + k] = r2[k];
    r[2 * n_ + k] = r3[k];
  }
  return r;
}

DMat DoubleSystem::left_mult(const std::vector<double>& x) const {
  // Columns are the products X . B_j of x with the flat basis.
  DMat m(3 * n_, 3 * n_);
  std::vector<double> basis(3 * n_, 0.0);
  for (int j = 0; j < 3 * n_; ++j) {
    basis[j] = 1.0;
    const auto col = product(x, basis);
    for (int i = 0; i < 3 * n_; ++i) m.at(i, j) = col[i];
    basis[j] = 0.0;
  }
  return m;
}

}  // namespace nahm
