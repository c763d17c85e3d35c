#include "nahm/bilinear_form.hpp"

namespace nahm {

BilinearForm::BilinearForm(Mat gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("BilinearForm: gram not square");
  if (gram_ != gram_.transpose()) throw std::invalid_argument("BilinearForm: gram not symmetric");
}

Rat BilinearForm::eval(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
    throw std::invalid_argument("BilinearForm::eval: dimension mismatch");
  Rat s;
  for (int i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j)
      if (!gram_.at(i, j).is_zero() && !y[j].is_zero()) s += x[i] * gram_.at(i, j) * y[j];
  }
  return s;
}

Definiteness BilinearForm::definiteness() const {
  // LU without pivoting: pivot products are the leading principal minors.
  // Breakdown (zero pivot) means some leading minor vanishes.
  const int n = dim();
  if (n == 0) return Definiteness::indefinite_or_semidefinite;
  Mat a = gram_;
  std::vector<int> minor_signs;
  Rat minor(1);
  for (int k = 0; k < n; ++k) {
    if (a.at(k, k).is_zero()) return Definiteness::indefinite_or_semidefinite;
    minor *= a.at(k, k);
    minor_signs.push_back(minor.sign());
    const Rat inv = Rat(1) / a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_zero()) continue;
      const Rat f = a.at(i, k) * inv;
      for (int j = k; j < n; ++j)
        if (!a.at(k, j).is_zero()) a.at(i, j) -= f * a.at(k, j);
    }
  }
  bool pos = true, neg = true;
  for (int k = 0; k < n; ++k) {
    if (minor_signs[k] <= 0) pos = false;
    if (minor_signs[k] != ((k % 2 == 0) ? -1 : 1)) neg = false;
  }
  if (pos) return Definiteness::positive_definite;
  if (neg) return Definiteness::negative_definite;
  return Definiteness::indefinite_or_semidefinite;
}

std::array<int, 3> BilinearForm::signature() const {
  const int n = dim();
  Mat a = gram_;
  int pos = 0, neg = 0, zero = 0;
  auto swap_rc = [&](int p, int q) {
    for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(q, j));
    for (int i = 0; i < n; ++i) std::swap(a.at(i, p), a.at(i, q));
  };
  auto add_rc = [&](int dst, int src) {  // row/col dst += row/col src
    for (int j = 0; j < n; ++j) a.at(dst, j) += a.at(src, j);
    for (int i = 0; i < n; ++i) a.at(i, dst) += a.at(i, src);
  };
  for (int k = 0; k < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int d = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a.at(i, i).is_zero()) { d = i; break; }
      if (d >= 0) {
        swap_rc(k, d);
      } else {
        int oi = -1, oj = -1;
        for (int i = k; i < n && oi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (!a.at(i, j).is_zero()) { oi = i;  oj = j; break; }
        if (oi < 0) { zero += n - k; break; }
        add_rc(oi, oj);  // makes a(oi,oi) = 2 a(oi,oj) != 0 in characteristic 0
        if (oi != k) swap_rc(k, oi);
      }
    }
    const Rat piv = a.at(k, k);
    (piv.sign() > 0 ? pos : neg) += 1;
    const Rat inv = Rat(1) / piv;
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_zero()) continue;
      const Rat f = a.at(i, k) * inv;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      for (int j = k; j < n; ++j) a.at(j, i) = a.at(i, j);
    }
  }
  return {pos, neg, zero};
}

}  // namespace nahm
