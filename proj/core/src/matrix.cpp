#include "nahm/matrix.hpp"

#include <algorithm>

namespace nahm {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Mat::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Mat::set_row(int i, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Mat::set_row: size mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Mat::set_block(int i0, int j0, const Mat& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

Mat Mat::block(int i0, int j0, int rows, int cols) const {
  Mat b(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) b.at(i, j) = at(i0 + i, j0 + j);
  return b;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rat Mat::trace() const {
  Rat t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rat& x) { return x.is_zero(); });
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

Vec Mat::vectorize() const { return e_; }

Mat Mat::from_vector(const Vec& v, int rows, int cols) {
  if (static_cast<int>(v.size()) != rows * cols)
    throw std::invalid_argument("Mat::from_vector: size mismatch");
  Mat m(rows, cols);
  m.e_ = v;
  return m;
}

Vec Mat::mul_vec(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Mat::mul_vec: size mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat s;
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+: shape mismatch");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat-: shape mismatch");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Mat*: shape mismatch");
  Mat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Mat operator*(const Rat& s, Mat m) {
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) m.at(i, j) *= s;
  return m;
}

RrefResult rref_with_pivots(const Mat& m) {
  Mat r = m;
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows(); ++i)
      if (!r.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
    const Rat inv = Rat(1) / r.at(lead, col);
    for (int j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead || r.at(i, col).is_zero()) continue;
      const Rat f = r.at(i, col);
      for (int j = col; j < r.cols(); ++j)
        if (!r.at(lead, j).is_zero()) r.at(i, j) -= f * r.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

Mat rref(const Mat& m) { return rref_with_pivots(m).reduced; }

int rank(const Mat& m) { return static_cast<int>(rref_with_pivots(m).pivot_cols.size()); }

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (int i = 0; i < a.rows(); ++i) aug.at(i, a.cols()) = b[i];
  auto [r, pivots] = rref_with_pivots(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r.at(static_cast<int>(k), a.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  Mat aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Mat::identity(n));
  auto [r, pivots] = rref_with_pivots(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  return r.block(0, n, n, n);
}

Rat determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const int n = m.rows();
  Mat a = m;
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    const Rat inv = Rat(1) / a.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      const Rat f = a.at(i, col) * inv;
      for (int j = col; j < n; ++j)
        if (!a.at(col, j).is_zero()) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return det;
}

bool EchelonSet::insert(Vec row) {
  if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("EchelonSet: size mismatch");
  int j = 0;
  while (j < cols_) {
    if (row[j].is_zero()) { ++j; continue; }
    const int pr = pivot_row_[j];
    if (pr < 0) break;
    const Rat f = row[j];
    const Vec& p = rows_[pr];
    for (int k = j; k < cols_; ++k)
      if (!p[k].is_zero()) row[k] -= f * p[k];
    ++j;
  }
  if (j >= cols_) return false;
  const Rat inv = Rat(1) / row[j];
  for (int k = j; k < cols_; ++k)
    if (!row[k].is_zero()) row[k] *= inv;
  pivot_row_[j] = static_cast<int>(rows_.size());
  pivot_col_.push_back(j);
  rows_.push_back(std::move(row));
  return true;
}

Mat EchelonSet::to_rref() const {
  // Order rows by pivot column, then eliminate above each pivot.
  std::vector<int> order(rows_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pivot_col_[a] < pivot_col_[b]; });
  std::vector<Vec> rows;
  rows.reserve(rows_.size());
  for (int idx : order) rows.push_back(rows_[idx]);
  std::vector<int> pcols;
  for (int idx : order) pcols.push_back(pivot_col_[idx]);
  for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r) {
    const int pc = pcols[r];
    for (int u = 0; u < r; ++u) {
      if (rows[u][pc].is_zero()) continue;
      const Rat f = rows[u][pc];
      for (int k = pc; k < cols_; ++k)
        if (!rows[r][k].is_zero()) rows[u][k] -= f * rows[r][k];
    }
  }
  Mat m(static_cast<int>(rows.size()), cols_);
  for (int i = 0; i < m.rows(); ++i) m.set_row(i, rows[i]);
  return m;
}

}  // namespace nahm
