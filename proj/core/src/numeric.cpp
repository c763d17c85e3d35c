#include "nahm/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace nahm {

DMat DMat::identity(int n) {
  DMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DMat operator*(const DMat& a, const DMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("DMat*: shape mismatch");
  DMat c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

DMat operator+(const DMat& a, const DMat& b) {
  DMat c = a;
  for (size_t k = 0; k < c.e.size(); ++k) c.e[k] += b.e[k];
  return c;
}

DMat operator-(const DMat& a, const DMat& b) {
  DMat c = a;
  for (size_t k = 0; k < c.e.size(); ++k) c.e[k] -= b.e[k];
  return c;
}

DMat scale(double s, const DMat& a) {
  DMat c = a;
  for (auto& x : c.e) x *= s;
  return c;
}

std::vector<double> mul_vec(const DMat& a, const std::vector<double>& v) {
  if (static_cast<int>(v.size()) != a.cols) throw std::invalid_argument("DMat mul_vec: size mismatch");
  std::vector<double> r(a.rows, 0.0);
  for (int i = 0; i < a.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols; ++j) s += a.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double inf_norm(const DMat& m) {
  double r = 0.0;
  for (double x : m.e) r = std::max(r, std::abs(x));
  return r;
}

bool lu_solve(DMat a, std::vector<double> b, std::vector<double>& x) {
  const int n = a.rows;
  if (a.cols != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("lu_solve: shape mismatch");
  double scale_max = 0.0;
  for (double v : a.e) scale_max = std::max(scale_max, std::abs(v));
  const double tiny = 1e-13 * std::max(scale_max, 1.0);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a.at(i, k)) > std::abs(a.at(piv, k))) piv = i;
    if (std::abs(a.at(piv, k)) < tiny) return false;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
      std::swap(b[piv], b[k]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = a.at(i, k) / a.at(k, k);
      if (f == 0.0) continue;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      b[i] -= f * b[k];
    }
  }
  x.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a.at(i, j) * x[j];
    x[i] = s / a.at(i, i);
  }
  return true;
}

DMat mat_exp(const DMat& a) {
  if (a.rows != a.cols) throw std::invalid_argument("mat_exp: not square");
  const int n = a.rows;
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(a.at(i, j));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const DMat s = scale(std::ldexp(1.0, -squarings), a);
  DMat result = DMat::identity(n);
  DMat term = DMat::identity(n);
  for (int k = 1; k <= 24; ++k) {
    term = scale(1.0 / k, term * s);
    result = result + term;
    if (inf_norm(term) < 1e-18 * std::max(1.0, inf_norm(result))) break;
  }
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

}  // namespace nahm
