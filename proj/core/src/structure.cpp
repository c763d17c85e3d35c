#include "nahm/structure.hpp"

namespace nahm {

namespace {

bool bracket_inclusion(const LieAlgebra& g, const Subspace& a, const Subspace& b,
                       const Subspace& target) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      if (!target.contains(g.bracket(a.basis_vector(i), b.basis_vector(j)))) return false;
  return true;
}

bool product_closed_in(const NahmAlgebra& a, const Subspace& s, const Subspace& target) {
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i; j < s.dim(); ++j) {
      const auto p = a.product(a.unflatten(s.basis_vector(i)), a.unflatten(s.basis_vector(j)));
      if (!target.contains(a.flatten(p))) return false;
    }
  return true;
}

}  // namespace

bool is_subalgebra_triple(const NahmAlgebra& a, const TripleSubspace& m) {
  const LieAlgebra& g = a.base();
  const Subspace* ms[3] = {&m.m1, &m.m2, &m.m3};
  for (int i = 0; i < 3; ++i)
    if (!bracket_inclusion(g, *ms[i], *ms[(i + 1) % 3], *ms[(i + 2) % 3])) return false;
  // Cross-assertion: the flat span must be closed under the product.
  const Subspace span = triple_span(a, m.m1, m.m2, m.m3);
  if (!product_closed_in(a, span, span))
    throw std::logic_error("is_subalgebra_triple: bracket conditions hold but span not closed");
  return true;
}

bool is_ideal_triple(const NahmAlgebra& a, const TripleSubspace& j) {
  const LieAlgebra& g = a.base();
  const Subspace full = Subspace::full(g.dim());
  const Subspace* hs[3] = {&j.m1, &j.m2, &j.m3};
  bool ok = true;
  for (int i = 0; i < 3 && ok; ++i) {
    const Subspace cap = hs[(i + 1) % 3]->intersect(*hs[(i + 2) % 3]);
    ok = bracket_inclusion(g, full, *hs[i], cap);
  }
  const bool general = is_ideal_general(a, triple_span(a, j.m1, j.m2, j.m3));
  if (ok != general)
    throw std::logic_error("is_ideal_triple: disagreement with the general ideal test");
  return ok;
}

bool is_ideal_general(const NahmAlgebra& a, const Subspace& s) {
  if (s.ambient() != a.dim()) throw std::invalid_argument("is_ideal_general: ambient mismatch");
  for (int i = 0; i < a.dim(); ++i)
    for (int r = 0; r < s.dim(); ++r) {
      const auto p = a.product(a.basis_element(i), a.unflatten(s.basis_vector(r)));
      if (!s.contains(a.flatten(p))) return false;
    }
  return true;
}

IdealProjections projections_of_ideal(const NahmAlgebra& a, const Subspace& s) {
  if (!is_ideal_general(a, s))
    throw std::invalid_argument("projections_of_ideal: subspace is not an ideal");
  const int n = a.n();
  IdealProjections out;
  std::vector<Vec> p1, p2, p3;
  for (int r = 0; r < s.dim(); ++r) {
    const NahmElement x = a.unflatten(s.basis_vector(r));
    p1.push_back(x.x1);
    p2.push_back(x.x2);
    p3.push_back(x.x3);
  }
  out.h1 = Subspace::span(n, p1);
  out.h2 = Subspace::span(n, p2);
  out.h3 = Subspace::span(n, p3);
  const Subspace full = Subspace::full(n);
  const Subspace* hs[3] = {&out.h1, &out.h2, &out.h3};
  out.inclusions_ok = true;
  for (int i = 0; i < 3; ++i) {
    const Subspace cap = hs[(i + 1) % 3]->intersect(*hs[(i + 2) % 3]);
    if (!bracket_inclusion(a.base(), full, *hs[i], cap)) out.inclusions_ok = false;
  }
  out.intersection = out.h1.intersect(out.h2).intersect(out.h3);
  out.intersection_is_ideal = bracket_inclusion(a.base(), full, out.intersection, out.intersection);
  return out;
}

GeneratedSubalgebra subalgebra_generated(const NahmAlgebra& a, const NahmElement& p) {
  GeneratedSubalgebra out;
  // Principal powers P, P^2, P^2 P, ...
  std::vector<Vec> powers;
  NahmElement q = p;
  powers.push_back(a.flatten(q));
  Subspace pspan = Subspace::span(a.dim(), powers);
  for (int guard = 0; guard < 3 * a.dim() + 2; ++guard) {
    q = a.product(q, p);
    powers.push_back(a.flatten(q));
    Subspace next = Subspace::span(a.dim(), powers);
    if (next == pspan) break;
    pspan = std::move(next);
  }
  out.principal_span = pspan;

  // Bilinear closure: pairwise products of a growing basis to a fixed point.
  Subspace closure = Subspace::span(a.dim(), {a.flatten(p)});
  while (true) {
    std::vector<Vec> gens;
    for (int i = 0; i < closure.dim(); ++i) gens.push_back(closure.basis_vector(i));
    for (int i = 0; i < closure.dim(); ++i)
      for (int j = i; j < closure.dim(); ++j)
        gens.push_back(a.flatten(
            a.product(a.unflatten(closure.basis_vector(i)), a.unflatten(closure.basis_vector(j)))));
    Subspace next = Subspace::span(a.dim(), gens);
    if (next == closure) break;
    closure = std::move(next);
  }
  out.closure = closure;
  if (!out.closure.contains(out.principal_span))
    throw std::logic_error("subalgebra_generated: closure misses a principal power");
  return out;
}

Subspace ideal_closure_nahm(const NahmAlgebra& a, const Subspace& seed) {
  Subspace s = seed;
  while (true) {
    std::vector<Vec> gens;
    for (int r = 0; r < s.dim(); ++r) gens.push_back(s.basis_vector(r));
    for (int i = 0; i < a.dim(); ++i)
      for (int r = 0; r < s.dim(); ++r)
        gens.push_back(
            a.flatten(a.product(a.basis_element(i), a.unflatten(s.basis_vector(r)))));
    Subspace next = Subspace::span(a.dim(), gens);
    if (next == s) return s;
    s = std::move(next);
  }
}

bool is_simple_nahm(const NahmAlgebra& a) {
  const bool base_simple = a.base().is_simple();
  bool closure_full = a.dim() > 0;
  for (int i = 0; i < a.dim() && closure_full; ++i) {
    const Subspace seed = Subspace::span(a.dim(), {a.flatten(a.basis_element(i))});
    if (!ideal_closure_nahm(a, seed).is_full()) closure_full = false;
  }
  // For simple A(g) every nonzero element generates A(g) as an ideal; a
  // mismatch in either direction is surfaced, never silently resolved.
  if (base_simple && !closure_full)
    throw std::logic_error("is_simple_nahm: base is simple but a basis ideal closure is proper");
  if (!base_simple && closure_full)
    throw std::logic_error(
        "is_simple_nahm: base is not simple but every basis ideal closure is full; "
        "supply a basis adapted to a proper ideal");
  return base_simple;
}

bool is_semisimple_nahm(const NahmAlgebra& a) {
  const bool base_ss = a.base().is_semisimple();
  const bool form_nd = a.standard_form().is_nondegenerate();
  if (base_ss != form_nd)
    throw std::logic_error("is_semisimple_nahm: Killing and standard form tests disagree");
  return base_ss;
}

Subspace radical_nahm(const NahmAlgebra& a) {
  const Subspace rad = a.base().radical();
  const Subspace out = triple_span(a, rad, rad, rad);
  if (!is_ideal_general(a, out)) throw std::logic_error("radical_nahm: A(rad g) is not an ideal");
  if (!quotient_by_radical(a.base()).is_semisimple())
    throw std::logic_error("radical_nahm: quotient base is not semisimple");
  return out;
}

LieAlgebra quotient_by_radical(const LieAlgebra& g) {
  const Subspace rad = g.radical();
  std::vector<bool> is_pivot(g.dim(), false);
  for (int r = 0; r < rad.dim(); ++r) {
    // Pivot column of canonical basis row r = first nonzero coordinate.
    const Vec b = rad.basis_vector(r);
    for (int j = 0; j < g.dim(); ++j)
      if (!b[j].is_zero()) { is_pivot[j] = true; break; }
  }
  std::vector<int> comp;  // complement coordinates, ascending
  for (int j = 0; j < g.dim(); ++j)
    if (!is_pivot[j]) comp.push_back(j);
  const int m = static_cast<int>(comp.size());
  LieAlgebra q(g.name() + "/rad", m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const Vec br = g.bracket(g.basis_vector(comp[a]), g.basis_vector(comp[b]));
      const Vec res = rad.reduce(br);
      for (int k = 0; k < m; ++k)
        if (!res[comp[k]].is_zero()) q.set_bracket_coeff(a, b, k, res[comp[k]]);
    }
  q.require_valid();
  return q;
}

LeviReport verify_levi(const NahmAlgebra& a, const std::vector<Vec>& s_basis) {
  const LieAlgebra& g = a.base();
  LeviReport rep;
  rep.levi = Subspace::span(g.dim(), s_basis);
  rep.radical = g.radical();
  rep.s_is_subalgebra = bracket_inclusion(g, rep.levi, rep.levi, rep.levi);
  if (rep.s_is_subalgebra && rep.levi.dim() == 0) {
    // The zero subalgebra is the (semisimple) Levi factor of a solvable g.
    rep.s_is_semisimple = true;
  } else if (rep.s_is_subalgebra) {
    // Structure constants restricted to the canonical basis of s.
    const int m = rep.levi.dim();
    LieAlgebra s("levi", m);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m && ok; ++j) {
        const auto coords =
            rep.levi.coordinates(g.bracket(rep.levi.basis_vector(i), rep.levi.basis_vector(j)));
        if (!coords) { ok = false; break; }
        for (int k = 0; k < m; ++k)
          if (!(*coords)[k].is_zero()) s.set_bracket_coeff(i, j, k, (*coords)[k]);
      }
    rep.s_is_semisimple = ok && s.is_semisimple();
  }
  rep.direct_sum_ok = rep.levi.dim() + rep.radical.dim() == g.dim() &&
                      rep.levi.intersect(rep.radical).is_zero();
  if (rep.pass()) {
    rep.nahm_levi = triple_span(a, rep.levi, rep.levi, rep.levi);
    rep.nahm_radical = radical_nahm(a);
  }
  return rep;
}

}  // namespace nahm
