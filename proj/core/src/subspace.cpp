#include "nahm/subspace.hpp"

namespace nahm {

Subspace Subspace::span_rows(const Mat& rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  auto [r, pivots] = rref_with_pivots(rows);
  s.basis_ = r.block(0, 0, static_cast<int>(pivots.size()), rows.cols());
  s.pivot_cols_ = std::move(pivots);
  return s;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& generators) {
  if (generators.empty()) return zero(ambient);
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != ambient)
      throw std::invalid_argument("Subspace::span: generator dimension mismatch");
  return span_rows(Mat::from_rows(generators));
}

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat::identity(ambient);
  s.pivot_cols_.resize(ambient);
  for (int i = 0; i < ambient; ++i) s.pivot_cols_[i] = i;
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Subspace::reduce: dimension mismatch");
  Vec r = v;
  for (int i = 0; i < dim(); ++i) {
    const int pc = pivot_cols_[i];
    if (r[pc].is_zero()) continue;
    const Rat f = r[pc];
    for (int j = pc; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) r[j] -= f * basis_.at(i, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec r = v;
  Vec coeff(dim());
  for (int i = 0; i < dim(); ++i) {
    const int pc = pivot_cols_[i];
    coeff[i] = r[pc];
    if (r[pc].is_zero()) continue;
    const Rat f = r[pc];
    for (int j = pc; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) r[j] -= f * basis_.at(i, j);
  }
  if (!vec_is_zero(r)) return std::nullopt;
  return coeff;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
  Mat rows(dim() + other.dim(), ambient_);
  rows.set_block(0, 0, basis_);
  rows.set_block(dim(), 0, other.basis_);
  return span_rows(rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  // x in U cap V  <=>  x = a B_U = b B_V; solve [B_U^t | -B_V^t] (a,b)^t = 0.
  const int du = dim(), dv = other.dim();
  if (du == 0 || dv == 0) return zero(ambient_);
  Mat sys(ambient_, du + dv);
  for (int i = 0; i < ambient_; ++i) {
    for (int a = 0; a < du; ++a) sys.at(i, a) = basis_.at(a, i);
    for (int b = 0; b < dv; ++b) sys.at(i, du + b) = -other.basis_.at(b, i);
  }
  const Subspace ker = nullspace(sys);
  std::vector<Vec> gens;
  for (int r = 0; r < ker.dim(); ++r) {
    const Vec ab = ker.basis_vector(r);
    Vec x(ambient_);
    for (int a = 0; a < du; ++a)
      for (int j = 0; j < ambient_; ++j)
        if (!basis_.at(a, j).is_zero()) x[j] += ab[a] * basis_.at(a, j);
    gens.push_back(std::move(x));
  }
  return span(ambient_, gens);
}

Subspace nullspace(const Mat& m) {
  auto [r, pivots] = rref_with_pivots(m);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = Rat(1);
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(static_cast<int>(k), f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

Subspace centralizer(const std::vector<Mat>& mats, int k) {
  for (const auto& m : mats)
    if (m.rows() != k || m.cols() != k)
      throw std::invalid_argument("centralizer: matrices must be square of equal size");
  EchelonSet rows(k * k);
  Vec row(static_cast<size_t>(k) * k);
  for (const auto& m : mats) {
    // (T m - m T)_{ij} = sum_s T_{is} m_{sj} - m_{is} T_{sj} = 0
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        std::fill(row.begin(), row.end(), Rat(0));
        bool nonzero = false;
        for (int s = 0; s < k; ++s) {
          if (!m.at(s, j).is_zero()) {
            row[static_cast<size_t>(i) * k + s] += m.at(s, j);
            nonzero = true;
          }
          if (!m.at(i, s).is_zero()) {
            row[static_cast<size_t>(s) * k + j] -= m.at(i, s);
            nonzero = true;
          }
        }
        if (nonzero) rows.insert(row);
      }
  }
  if (rows.dim() == 0) return Subspace::full(k * k);
  return nullspace(rows.to_rref());
}

}  // namespace nahm
