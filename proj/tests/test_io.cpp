#include "doctest.h"
#include "nahm/algebra_io.hpp"
#include "nahm/catalog.hpp"

using namespace nahm;

namespace {

const char* kSo3Doc = R"JSON({
  "name": "so3",
  "dim": 3,
  "brackets": [
    {"i": 1, "j": 2, "coeffs": [{"k": 3, "num": 1, "den": 1}]},
    {"i": 2, "j": 3, "coeffs": [{"k": 1, "num": 1, "den": 1}]},
    {"i": 1, "j": 3, "coeffs": [{"k": 2, "num": -1, "den": 1}]}
  ]
})JSON";

bool same_constants(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        if (a.c(i, j, k) != b.c(i, j, k)) return false;
  return true;
}

}  // namespace

TEST_CASE("so3 document parses and equals the catalog entry") {
  const LieAlgebra g = parse_algebra(kSo3Doc);
  CHECK(g.dim() == 3);
  CHECK(same_constants(g, catalog("so3")));
}

TEST_CASE("empty brackets give the abelian algebra") {
  const LieAlgebra g = parse_algebra(R"({"name": "flat", "dim": 2, "brackets": []})");
  CHECK(same_constants(g, catalog("abelian(2)")));
}

TEST_CASE("round trip: parse(emit(parse(d))) = parse(d) on the catalog") {
  for (const auto& name : {"so3", "sl2", "heisenberg", "aff1", "sl2+aff1"}) {
    const LieAlgebra g = catalog(name);
    const std::string text = emit_algebra(g);
    const LieAlgebra back = parse_algebra(text);
    CHECK(same_constants(g, back));
    CHECK(emit_algebra(back) == text);
  }
}

TEST_CASE("rejection paths") {
  CHECK_THROWS_AS(parse_algebra("not json"), AlgebraIoError);
  CHECK_THROWS_AS(parse_algebra(R"({"dim": -1})"), AlgebraIoError);
  // index out of range
  CHECK_THROWS_AS(
      parse_algebra(
          R"({"dim": 2, "brackets": [{"i": 1, "j": 3, "coeffs": [{"k": 1, "num": 1, "den": 1}]}]})"),
      AlgebraIoError);
  // i >= j
  CHECK_THROWS_AS(
      parse_algebra(
          R"({"dim": 2, "brackets": [{"i": 2, "j": 1, "coeffs": [{"k": 1, "num": 1, "den": 1}]}]})"),
      AlgebraIoError);
  // zero denominator
  CHECK_THROWS_AS(
      parse_algebra(
          R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": [{"k": 1, "num": 1, "den": 0}]}]})"),
      AlgebraIoError);
}

TEST_CASE("jacobi violation is rejected with the failing quadruple") {
  // [e1,e2] = e1, [e1,e3] = e3, [e2,e3] = 0: Jacobi fails.
  const char* doc = R"JSON({
    "dim": 3,
    "brackets": [
      {"i": 1, "j": 2, "coeffs": [{"k": 1, "num": 1, "den": 1}]},
      {"i": 1, "j": 3, "coeffs": [{"k": 3, "num": 1, "den": 1}]}
    ]
  })JSON";
  try {
    parse_algebra(doc);
    FAIL("expected AlgebraIoError");
  } catch (const AlgebraIoError& e) {
    CHECK(std::string(e.what()).find("(1,2,3,3)") != std::string::npos);
  }
}

TEST_CASE("load_algebra resolves catalog: prefixes") {
  CHECK(same_constants(load_algebra("catalog:sl2"), catalog("sl2")));
  CHECK_THROWS(load_algebra("/nonexistent/path.json"));
}
