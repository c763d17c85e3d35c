#include <array>
#include <random>

#include "doctest.h"
#include "nahm/bilinear_form.hpp"
#include "nahm/catalog.hpp"

using namespace nahm;

namespace {

Mat mat(int rows, int cols, const std::vector<long>& entries) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(entries[i * cols + j]);
  return m;
}

Mat random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> d(-4, 4);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(d(rng), 1 + (d(rng) & 1));
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced with positive denominator") {
  const Rat a(6, -4);
  CHECK(a == Rat(-3, 2));
  CHECK(a.den() == 2);
  CHECK(a.str() == "-3/2");
  CHECK(Rat::parse("7/21") == Rat(1, 3));
  CHECK(Rat::parse("-5") == Rat(-5));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
  CHECK(Rat::from_double(0.5, 1000000) == Rat(1, 2));
  CHECK(Rat::from_double(-2.0 / 3.0, 1000000) == Rat(-2, 3));
}

TEST_CASE("rref fixed points and hand-eliminated example") {
  CHECK(rref(Mat::identity(3)) == Mat::identity(3));
  CHECK(rref(Mat(2, 3)) == Mat(2, 3));
  // [[2,4],[1,2]] -> [[1,2],[0,0]] by hand Gaussian elimination.
  CHECK(rref(mat(2, 2, {2, 4, 1, 2})) == mat(2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref is idempotent and preserves rank (random)") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat m = random_matrix(rng, 4, 6);
    const Mat r = rref(m);
    CHECK(rref(r) == r);
    CHECK(rank(m) + nullspace(m).dim() == m.cols());
  }
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(Mat::identity(4)).dim() == 0);
  CHECK(nullspace(Mat(2, 3)).dim() == 3);
  const Subspace s = nullspace(mat(1, 3, {1, 1, 0}));
  CHECK(s.dim() == 2);
  CHECK(s.contains({Rat(1), Rat(-1), Rat(0)}));
  CHECK(s.contains({Rat(0), Rat(0), Rat(1)}));
  CHECK_FALSE(s.contains({Rat(1), Rat(1), Rat(0)}));
}

TEST_CASE("nullspace vectors satisfy m v = 0 exactly (random)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat m = random_matrix(rng, 3, 5);
    const Subspace ker = nullspace(m);
    for (int r = 0; r < ker.dim(); ++r) CHECK(vec_is_zero(m.mul_vec(ker.basis_vector(r))));
  }
}

TEST_CASE("solve and inverse") {
  const Mat a = mat(2, 2, {1, 2, 3, 4});
  const auto x = solve(a, {Rat(5), Rat(11)});
  REQUIRE(x.has_value());
  CHECK(a.mul_vec(*x) == Vec{Rat(5), Rat(11)});
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK((*inv * a).is_identity());
  CHECK_FALSE(inverse(mat(2, 2, {1, 2, 2, 4})).has_value());
  CHECK_FALSE(solve(mat(2, 2, {1, 1, 1, 1}), {Rat(0), Rat(1)}).has_value());
  CHECK(determinant(a) == Rat(-2));
}

TEST_CASE("centralizer of the identity and of the empty set is everything") {
  CHECK(centralizer({Mat::identity(3)}, 3).dim() == 9);
  CHECK(centralizer({}, 3).dim() == 9);
}

TEST_CASE("centralizer of the so3 adjoint basis is the scalars") {
  const LieAlgebra g = catalog("so3");
  std::vector<Mat> ads;
  for (int i = 0; i < 3; ++i) ads.push_back(g.ad(g.basis_vector(i)));
  const Subspace c = centralizer(ads, 3);
  CHECK(c.dim() == 1);
  CHECK(c.contains(Mat::identity(3).vectorize()));
}

TEST_CASE("centralizer members exactly commute (random)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<Mat> mats = {random_matrix(rng, 3, 3), random_matrix(rng, 3, 3)};
    const Subspace c = centralizer(mats, 3);
    for (int r = 0; r < c.dim(); ++r) {
      const Mat t = Mat::from_vector(c.basis_vector(r), 3, 3);
      for (const auto& m : mats) CHECK(t * m == m * t);
    }
  }
}

TEST_CASE("subspace canonical equality and operations") {
  const Subspace s1 = Subspace::span(3, {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(2)}});
  const Subspace s2 = Subspace::span(3, {{Rat(2), Rat(2), Rat(2)}, {Rat(0), Rat(0), Rat(-1)}});
  CHECK(s1 == s2);  // same row space, same canonical basis
  CHECK(s1.dim() == 2);
  CHECK(s1.sum(Subspace::span(3, {{Rat(1), Rat(0), Rat(0)}})).is_full());
  const Subspace line = s1.intersect(Subspace::span(3, {{Rat(0), Rat(0), Rat(1)}}));
  CHECK(line.dim() == 1);
  CHECK(line.contains({Rat(0), Rat(0), Rat(5)}));
  const auto coords = s1.coordinates({Rat(3), Rat(3), Rat(4)});
  REQUIRE(coords.has_value());
}

TEST_CASE("definiteness classification") {
  CHECK(BilinearForm(Mat::identity(3)).definiteness() == Definiteness::positive_definite);
  CHECK(BilinearForm(Rat(-1) * Mat::identity(3)).definiteness() ==
        Definiteness::negative_definite);
  Mat d(2, 2);
  d.at(0, 0) = Rat(1);
  d.at(1, 1) = Rat(-1);
  CHECK(BilinearForm(d).definiteness() == Definiteness::indefinite_or_semidefinite);
  Mat z(2, 2);
  z.at(1, 1) = Rat(-1);
  CHECK(BilinearForm(z).definiteness() == Definiteness::indefinite_or_semidefinite);
}

TEST_CASE("signature by congruence") {
  CHECK(BilinearForm(Mat::identity(4)).signature() == std::array<int, 3>{4, 0, 0});
  Mat m(3, 3);
  m.at(0, 0) = Rat(2);
  m.at(1, 1) = Rat(-5);
  CHECK(BilinearForm(m).signature() == std::array<int, 3>{1, 1, 1});
  // Hyperbolic plane: zero diagonal, off-diagonal 1 -> signature (1, 1).
  Mat h(2, 2);
  h.at(0, 1) = Rat(1);
  h.at(1, 0) = Rat(1);
  CHECK(BilinearForm(h).signature() == std::array<int, 3>{1, 1, 0});
}

TEST_CASE("signature is a congruence invariant (Sylvester's law, random)") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    // Known inertia from a diagonal seed.
    const int n = 4;
    std::array<int, 3> expected{0, 0, 0};
    Mat diag(n, n);
    for (int i = 0; i < n; ++i) {
      const int v = d(rng);
      diag.at(i, i) = Rat(v);
      ++expected[v > 0 ? 0 : v < 0 ? 1 : 2];
    }
    // Congruence by a random invertible matrix preserves it.
    Mat p;
    do {
      p = random_matrix(rng, n, n);
    } while (rank(p) < n);
    const BilinearForm f(p.transpose() * diag * p);
    CHECK(f.signature() == expected);
    // Consistency with the Sylvester minor classification.
    if (expected == std::array<int, 3>{n, 0, 0})
      CHECK(f.definiteness() == Definiteness::positive_definite);
    if (expected == std::array<int, 3>{0, n, 0})
      CHECK(f.definiteness() == Definiteness::negative_definite);
    if (expected[2] > 0) CHECK(f.radical().dim() == expected[2]);
  }
}

TEST_CASE("echelon set matches batch rref") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat m = random_matrix(rng, 6, 4);
    EchelonSet es(4);
    for (int i = 0; i < m.rows(); ++i) es.insert(m.row(i));
    const auto batch = rref_with_pivots(m);
    const Mat stream = es.to_rref();
    CHECK(stream.rows() == static_cast<int>(batch.pivot_cols.size()));
    CHECK(Subspace::span_rows(stream) == Subspace::span_rows(m));
  }
}
