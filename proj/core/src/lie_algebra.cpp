#include "nahm/lie_algebra.hpp"

namespace nahm {

LieAlgebra::LieAlgebra(std::string name, int dim)
    : name_(std::move(name)), n_(dim), c_(static_cast<size_t>(dim) * dim * dim) {
  if (dim < 0) throw std::invalid_argument("LieAlgebra: negative dimension");
}

LieAlgebra::LieAlgebra(std::string name, int dim, std::vector<Rat> tensor)
    : name_(std::move(name)), n_(dim), c_(std::move(tensor)) {
  if (dim < 0) throw std::invalid_argument("LieAlgebra: negative dimension");
  if (c_.size() != static_cast<size_t>(dim) * dim * dim)
    throw std::invalid_argument("LieAlgebra: tensor size mismatch");
}

void LieAlgebra::set_bracket_coeff(int i, int j, int k, const Rat& v) {
  c_[idx(i, j, k)] = v;
  c_[idx(j, i, k)] = -v;
}

ValidationReport LieAlgebra::validate() const {
  ValidationReport rep;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (c(i, j, k) != -c(j, i, k)) {
          rep.antisymmetry_ok = false;
          rep.antisymmetry_failures.push_back({i, j, k});
        }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k)
        for (int l = 0; l < n_; ++l) {
          Rat s;
          for (int m = 0; m < n_; ++m)
            s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
          if (!s.is_zero()) {
            rep.jacobi_ok = false;
            rep.jacobi_failures.push_back({i, j, k, l});
          }
        }
  return rep;
}

void LieAlgebra::require_valid() const {
  const auto rep = validate();
  if (!rep.ok())
    throw std::invalid_argument("LieAlgebra '" + name_ + "': structure constants violate " +
                                (rep.antisymmetry_ok ? "the Jacobi identity" : "antisymmetry"));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw std::invalid_argument("bracket: dimension mismatch");
  Vec r(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      const Rat f = x[i] * y[j];
      for (int k = 0; k < n_; ++k)
        if (!c(i, j, k).is_zero()) r[k] += f * c(i, j, k);
    }
  }
  return r;
}

Mat LieAlgebra::ad(const Vec& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("ad: dimension mismatch");
  Mat m(n_, n_);
  for (int j = 0; j < n_; ++j) {
    // column j = [x, b_j]
    for (int i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (int k = 0; k < n_; ++k)
        if (!c(i, j, k).is_zero()) m.at(k, j) += x[i] * c(i, j, k);
    }
  }
  return m;
}

Vec LieAlgebra::basis_vector(int i) const {
  Vec v(n_);
  v.at(i) = Rat(1);
  return v;
}

BilinearForm LieAlgebra::killing() const {
  std::vector<Mat> ads;
  ads.reserve(n_);
  for (int i = 0; i < n_; ++i) ads.push_back(ad(basis_vector(i)));
  Mat gram(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      const Mat p = ads[i] * ads[j];
      gram.at(i, j) = p.trace();
      gram.at(j, i) = gram.at(i, j);
    }
  return BilinearForm(std::move(gram));
}

Subspace LieAlgebra::bracket_span(const Subspace& a, const Subspace& b) const {
  std::vector<Vec> gens;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) gens.push_back(bracket(a.basis_vector(i), b.basis_vector(j)));
  return Subspace::span(n_, gens);
}

Subspace LieAlgebra::derived_algebra() const {
  return bracket_span(Subspace::full(n_), Subspace::full(n_));
}

DerivedSeries LieAlgebra::derived_series() const {
  DerivedSeries ds;
  ds.terms.push_back(Subspace::full(n_));
  while (true) {
    const Subspace& last = ds.terms.back();
    Subspace next = bracket_span(last, last);
    if (next == last) break;
    ds.terms.push_back(std::move(next));
    if (ds.terms.back().is_zero()) break;
  }
  ds.solvable = ds.terms.back().is_zero();
  return ds;
}

Subspace LieAlgebra::radical() const {
  // Cartan criterion: rad g = { x : kappa(x, [g,g]) = 0 }.
  const BilinearForm kappa = killing();
  const Subspace derived = derived_algebra();
  Mat sys(derived.dim(), n_);
  for (int r = 0; r < derived.dim(); ++r) {
    const Vec d = derived.basis_vector(r);
    for (int j = 0; j < n_; ++j) {
      Rat s;
      for (int i = 0; i < n_; ++i)
        if (!d[i].is_zero()) s += d[i] * kappa.gram().at(i, j);
      sys.at(r, j) = s;
    }
  }
  Subspace rad = derived.dim() == 0 ? Subspace::full(n_) : nullspace(sys);

  // Post-verification: must be a solvable ideal.
  for (int i = 0; i < n_; ++i)
    for (int r = 0; r < rad.dim(); ++r)
      if (!rad.contains(bracket(basis_vector(i), rad.basis_vector(r))))
        throw std::logic_error("radical: candidate is not an ideal");
  Subspace term = rad;
  for (int guard = 0; guard <= n_ + 1 && !term.is_zero(); ++guard) {
    Subspace next = bracket_span(term, term);
    if (next == term) throw std::logic_error("radical: candidate is not solvable");
    term = std::move(next);
  }
  return rad;
}

bool LieAlgebra::is_semisimple() const { return killing().is_nondegenerate(); }

Subspace LieAlgebra::ideal_closure(const std::vector<Vec>& seed) const {
  Subspace s = Subspace::span(n_, seed);
  while (true) {
    std::vector<Vec> gens;
    for (int r = 0; r < s.dim(); ++r) gens.push_back(s.basis_vector(r));
    for (int i = 0; i < n_; ++i)
      for (int r = 0; r < s.dim(); ++r) gens.push_back(bracket(basis_vector(i), s.basis_vector(r)));
    Subspace next = Subspace::span(n_, gens);
    if (next == s) return s;
    s = std::move(next);
  }
}

SimplicityReport LieAlgebra::simplicity() const {
  SimplicityReport rep;
  rep.derived_nonzero = !derived_algebra().is_zero();
  rep.semisimple = is_semisimple();
  std::vector<Mat> ads;
  for (int i = 0; i < n_; ++i) ads.push_back(ad(basis_vector(i)));
  rep.centralizer_dim = centralizer(ads, n_).dim();
  rep.centralizer_test = rep.derived_nonzero && rep.semisimple && rep.centralizer_dim == 1;
  rep.closure_test = n_ > 0 && rep.derived_nonzero;
  for (int i = 0; i < n_ && rep.closure_test; ++i)
    if (!ideal_closure({basis_vector(i)}).is_full()) rep.closure_test = false;
  rep.agree = rep.centralizer_test == rep.closure_test;
  return rep;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra s(a.name() + "+" + b.name(), a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        if (!a.c(i, j, k).is_zero()) s.set_bracket_coeff(i, j, k, a.c(i, j, k));
  const int o = a.dim();
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      for (int k = 0; k < b.dim(); ++k)
        if (!b.c(i, j, k).is_zero()) s.set_bracket_coeff(o + i, o + j, o + k, b.c(i, j, k));
  return s;
}

Representation Representation::make(LieAlgebra g, std::vector<Mat> rho) {
  if (static_cast<int>(rho.size()) != g.dim())
    throw std::invalid_argument("Representation: need one matrix per basis vector");
  const int v = rho.empty() ? 0 : rho[0].rows();
  for (const auto& m : rho)
    if (m.rows() != v || m.cols() != v)
      throw std::invalid_argument("Representation: matrices must be square of equal size");
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      Mat lhs(v, v);
      for (int k = 0; k < g.dim(); ++k)
        if (!g.c(i, j, k).is_zero()) lhs += g.c(i, j, k) * rho[k];
      if (lhs != rho[i] * rho[j] - rho[j] * rho[i])
        throw std::invalid_argument("Representation: homomorphism law fails at basis pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return Representation(std::move(g), v, std::move(rho));
}

Representation Representation::adjoint(const LieAlgebra& g) {
  std::vector<Mat> rho;
  rho.reserve(g.dim());
  for (int i = 0; i < g.dim(); ++i) rho.push_back(g.ad(g.basis_vector(i)));
  return Representation(g, g.dim(), std::move(rho));
}

Representation Representation::zero(const LieAlgebra& g, int space_dim) {
  return Representation(g, space_dim, std::vector<Mat>(g.dim(), Mat(space_dim, space_dim)));
}

Mat Representation::rho(const Vec& x) const {
  if (static_cast<int>(x.size()) != g_.dim())
    throw std::invalid_argument("Representation::rho: dimension mismatch");
  Mat m(space_dim_, space_dim_);
  for (int i = 0; i < g_.dim(); ++i)
    if (!x[i].is_zero()) m += x[i] * rho_[i];
  return m;
}

BilinearForm trace_form(const Representation& rep) {
  const int n = rep.algebra().dim();
  Mat gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      gram.at(i, j) = (rep.rho_basis(i) * rep.rho_basis(j)).trace();
      gram.at(j, i) = gram.at(i, j);
    }
  return BilinearForm(std::move(gram));
}

}  // namespace nahm
