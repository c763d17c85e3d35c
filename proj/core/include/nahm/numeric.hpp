#pragma once

#include <vector>

namespace nahm {

/// Small dense double-precision kernels for the numeric side of the library
/// (Newton search, flow integration, matrix exponentials). Row-major.
struct DMat {
  int rows = 0, cols = 0;
  std::vector<double> e;

  DMat() = default;
  DMat(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  [[nodiscard]] double at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

  static DMat identity(int n);
};

DMat operator*(const DMat& a, const DMat& b);
DMat operator+(const DMat& a, const DMat& b);
DMat operator-(const DMat& a, const DMat& b);
DMat scale(double s, const DMat& a);
std::vector<double> mul_vec(const DMat& a, const std::vector<double>& v);

double inf_norm(const std::vector<double>& v);
double inf_norm(const DMat& m);  // max absolute entry

/// Solves a x = b by LU with partial pivoting; false when numerically
/// singular (a pivot below tiny relative threshold).
bool lu_solve(DMat a, std::vector<double> b, std::vector<double>& x);

/// Matrix exponential by scaling-and-squaring with a truncated Taylor series;
/// accurate to ~1e-14 relative for the small matrices used here.
DMat mat_exp(const DMat& a);

}  // namespace nahm
