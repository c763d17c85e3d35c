#include <random>

#include "doctest.h"
#include "nahm/catalog.hpp"

using namespace nahm;

namespace {

Vec rv(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec v(n);
  for (auto& x : v) x = Rat(d(rng));
  return v;
}

}  // namespace

TEST_CASE("catalog entries validate") {
  for (const auto& name : {"so3", "sl2", "heisenberg", "aff1", "abelian(2)", "sl2+aff1",
                           "so3+so3", "so3+abelian(1)"}) {
    const LieAlgebra g = catalog(name);
    CHECK(g.validate().ok());
  }
  CHECK(catalog("abelian(2)").dim() == 2);
  CHECK(catalog("sl2+aff1").dim() == 5);
  CHECK_THROWS_AS(catalog("nope"), std::invalid_argument);
}

TEST_CASE("validate reports failing indices") {
  // Antisymmetry violation: c[0][1][2] = c[1][0][2] = 1, built from the raw tensor.
  std::vector<Rat> tensor(27);
  tensor[(0 * 3 + 1) * 3 + 2] = Rat(1);
  tensor[(1 * 3 + 0) * 3 + 2] = Rat(1);
  const LieAlgebra g("bad", 3, std::move(tensor));
  const auto rep = g.validate();
  CHECK_FALSE(rep.antisymmetry_ok);
  CHECK_FALSE(rep.antisymmetry_failures.empty());

  // [e1,e2]=e1, [e1,e3]=e3, [e2,e3]=0: the Jacobi sum at (1,2,3) is e3.
  LieAlgebra h("nonjacobi", 3);
  h.set_bracket_coeff(0, 1, 0, Rat(1));
  h.set_bracket_coeff(0, 2, 2, Rat(1));
  const auto rep2 = h.validate();
  CHECK(rep2.antisymmetry_ok);
  CHECK_FALSE(rep2.jacobi_ok);
  REQUIRE_FALSE(rep2.jacobi_failures.empty());
  CHECK(rep2.jacobi_failures.front() == std::array<int, 4>{0, 1, 2, 2});
}

TEST_CASE("bracket bilinearity and the so3 table") {
  const LieAlgebra g = catalog("so3");
  CHECK(g.bracket(g.basis_vector(0), g.basis_vector(1)) == g.basis_vector(2));
  CHECK(g.bracket(g.basis_vector(1), g.basis_vector(2)) == g.basis_vector(0));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Vec x = rv(rng, 3);
    CHECK(vec_is_zero(g.bracket(x, x)));
  }
  const LieAlgebra sl2 = catalog("sl2");
  CHECK(sl2.bracket(sl2.basis_vector(1), sl2.basis_vector(2)) == sl2.basis_vector(0));
  CHECK_THROWS_AS(static_cast<void>(g.bracket(Vec(2), Vec(3))), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(g.ad(Vec(4))), std::invalid_argument);
}

TEST_CASE("ad matrices") {
  const LieAlgebra g = catalog("so3");
  Mat expected(3, 3);
  expected.at(1, 2) = Rat(-1);
  expected.at(2, 1) = Rat(1);
  CHECK(g.ad(g.basis_vector(0)) == expected);
  const LieAlgebra ab = catalog("abelian(3)");
  std::mt19937_64 rng(6);
  CHECK(ab.ad(rv(rng, 3)).is_zero());
  // ad(x) x = 0
  const Vec x = rv(rng, 3);
  CHECK(vec_is_zero(g.ad(x).mul_vec(x)));
}

TEST_CASE("killing forms frozen from hand trace computations") {
  CHECK(catalog("so3").killing().gram() == Rat(-2) * Mat::identity(3));
  CHECK(catalog("heisenberg").killing().gram().is_zero());
  const Mat k = catalog("sl2").killing().gram();
  Mat expected(3, 3);
  expected.at(0, 0) = Rat(8);
  expected.at(1, 2) = Rat(4);
  expected.at(2, 1) = Rat(4);
  CHECK(k == expected);
}

TEST_CASE("trace form of the adjoint equals killing; zero rep gives zero") {
  for (const auto& name : {"so3", "sl2", "heisenberg"}) {
    const LieAlgebra g = catalog(name);
    CHECK(trace_form(Representation::adjoint(g)).gram() == g.killing().gram());
  }
  const LieAlgebra g = catalog("so3");
  CHECK(trace_form(Representation::zero(g, 4)).gram().is_zero());
  CHECK(trace_form(so3_defining_representation()).gram() == Rat(-2) * Mat::identity(3));
}

TEST_CASE("representation validation rejects non-homomorphisms") {
  const LieAlgebra g = catalog("so3");
  std::vector<Mat> bad = {Mat::identity(3), Mat::identity(3), Mat::identity(3)};
  CHECK_THROWS_AS(Representation::make(g, bad), std::invalid_argument);
  CHECK_NOTHROW(sl2_defining_representation());
}

TEST_CASE("derived series") {
  const auto heis = catalog("heisenberg").derived_series();
  REQUIRE(heis.terms.size() == 3);
  CHECK(heis.terms[1].dim() == 1);
  CHECK(heis.terms[1].contains({Rat(0), Rat(0), Rat(1)}));
  CHECK(heis.terms[2].is_zero());
  CHECK(heis.solvable);

  const auto so3 = catalog("so3").derived_series();
  CHECK(so3.terms.size() == 1);
  CHECK_FALSE(so3.solvable);

  const auto ab = catalog("abelian(2)").derived_series();
  CHECK(ab.solvable);
  CHECK(ab.terms.back().is_zero());
}

TEST_CASE("radical") {
  CHECK(catalog("so3").radical().is_zero());
  CHECK(catalog("heisenberg").radical().is_full());
  const LieAlgebra g = catalog("sl2+aff1");
  const Subspace rad = g.radical();
  CHECK(rad.dim() == 2);
  CHECK(rad.contains({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)}));
  CHECK(rad.contains({Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("semisimplicity") {
  CHECK(catalog("so3").is_semisimple());
  CHECK_FALSE(catalog("heisenberg").is_semisimple());
  CHECK(catalog("sl2+so3").is_semisimple());
  CHECK_FALSE(catalog("sl2+aff1").is_semisimple());
  // radical-zero characterization on the catalog
  for (const auto& name : {"so3", "sl2", "heisenberg", "aff1", "abelian(3)", "sl2+aff1"}) {
    const LieAlgebra g = catalog(name);
    CHECK(g.is_semisimple() == g.radical().is_zero());
  }
}

TEST_CASE("ideal closure") {
  const LieAlgebra so3 = catalog("so3");
  CHECK(so3.ideal_closure({so3.basis_vector(0)}).is_full());
  const LieAlgebra heis = catalog("heisenberg");
  const Subspace z = heis.ideal_closure({heis.basis_vector(2)});
  CHECK(z.dim() == 1);
  CHECK(so3.ideal_closure({}).is_zero());
}

TEST_CASE("simplicity") {
  CHECK(catalog("so3").is_simple());
  CHECK(catalog("sl2").is_simple());
  CHECK_FALSE(catalog("so3+so3").is_simple());
  CHECK_FALSE(catalog("abelian(1)").is_simple());
  CHECK_FALSE(catalog("heisenberg").is_simple());
  const auto rep = catalog("so3+so3").simplicity();
  CHECK(rep.centralizer_dim >= 2);
  CHECK(rep.agree);
  // random nonzero seeds generate the whole algebra when simple
  std::mt19937_64 rng(9);
  const LieAlgebra g = catalog("so3");
  for (int t = 0; t < 10; ++t) {
    Vec v = rv(rng, 3);
    if (vec_is_zero(v)) continue;
    CHECK(g.ideal_closure({v}).is_full());
  }
}

TEST_CASE("direct sums") {
  const LieAlgebra s = catalog("so3+abelian(1)");
  CHECK(s.dim() == 4);
  CHECK(s.radical().dim() == 1);
  // killing is block diagonal: trace additivity
  const LieAlgebra a = catalog("so3"), b = catalog("sl2");
  const LieAlgebra sum = direct_sum(a, b);
  const Mat k = sum.killing().gram();
  CHECK(k.block(0, 0, 3, 3) == a.killing().gram());
  CHECK(k.block(3, 3, 3, 3) == b.killing().gram());
  CHECK(k.block(0, 3, 3, 3).is_zero());
  // zero-dim summand is neutral
  CHECK(direct_sum(a, catalog("abelian(0)")).killing().gram() == a.killing().gram());
}
