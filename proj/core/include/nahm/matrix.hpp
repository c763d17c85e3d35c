#pragma once

#include <optional>
#include <utility>

#include "nahm/rational.hpp"

namespace nahm {

/// Dense exact-rational matrix, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }

  Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  [[nodiscard]] const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  [[nodiscard]] Vec row(int i) const;
  [[nodiscard]] Vec col(int j) const;
  void set_row(int i, const Vec& v);
  /// Writes b into the block with upper-left corner (i0, j0).
  void set_block(int i0, int j0, const Mat& b);
  [[nodiscard]] Mat block(int i0, int j0, int rows, int cols) const;

  [[nodiscard]] Mat transpose() const;
  [[nodiscard]] Rat trace() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;

  /// Row-major flattening; the coordinate convention for operator spaces.
  [[nodiscard]] Vec vectorize() const;
  static Mat from_vector(const Vec& v, int rows, int cols);

  [[nodiscard]] Vec mul_vec(const Vec& v) const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Rat& s, Mat m);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

struct RrefResult {
  Mat reduced;
  std::vector<int> pivot_cols;
};

/// Unique reduced row-echelon form (Gauss-Jordan, exact).
Mat rref(const Mat& m);
RrefResult rref_with_pivots(const Mat& m);
int rank(const Mat& m);

/// One solution of a x = b, if the system is consistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);
std::optional<Mat> inverse(const Mat& m);

/// Determinant by fraction-free elimination.
Rat determinant(const Mat& m);

/// Streaming row-space builder: rows are forward-reduced on insert and the
/// canonical reduced echelon form is produced once at the end. Cheap for the
/// large, mostly redundant constraint systems assembled by the operator
/// modules.
class EchelonSet {
 public:
  explicit EchelonSet(int cols) : cols_(cols), pivot_row_(cols, -1) {}

  /// Returns true when the row enlarged the span.
  bool insert(Vec row);
  [[nodiscard]] int dim() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int cols() const { return cols_; }

  /// Back-substitutes and returns the rows as a canonical RREF matrix.
  [[nodiscard]] Mat to_rref() const;

 private:
  int cols_;
  std::vector<Vec> rows_;        // each normalized to leading 1
  std::vector<int> pivot_col_;   // per stored row
  std::vector<int> pivot_row_;   // col -> row index or -1
};

}  // namespace nahm
