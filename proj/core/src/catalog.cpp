#include "nahm/catalog.hpp"

namespace nahm {
namespace {

LieAlgebra so3() {
  LieAlgebra g("so3", 3);
  // [e_i, e_{i+1}] = e_{i+2}, indices mod 3
  g.set_bracket_coeff(0, 1, 2, Rat(1));
  g.set_bracket_coeff(1, 2, 0, Rat(1));
  g.set_bracket_coeff(2, 0, 1, Rat(1));
  return g;
}

LieAlgebra sl2() {
  LieAlgebra g("sl2", 3);
  // basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
  g.set_bracket_coeff(0, 1, 1, Rat(2));
  g.set_bracket_coeff(0, 2, 2, Rat(-2));
  g.set_bracket_coeff(1, 2, 0, Rat(1));
  return g;
}

LieAlgebra heisenberg() {
  LieAlgebra g("heisenberg", 3);
  g.set_bracket_coeff(0, 1, 2, Rat(1));  // [x,y] = z
  return g;
}

LieAlgebra aff1() {
  LieAlgebra g("aff1", 2);
  g.set_bracket_coeff(0, 1, 1, Rat(1));  // [a,b] = b
  return g;
}

LieAlgebra abelian(int n) {
  if (n < 0) throw std::invalid_argument("catalog: abelian dimension must be >= 0");
  return LieAlgebra("abelian(" + std::to_string(n) + ")", n);
}

LieAlgebra atom(const std::string& name) {
  if (name == "so3") return so3();
  if (name == "sl2") return sl2();
  if (name == "heisenberg") return heisenberg();
  if (name == "aff1") return aff1();
  if (name.rfind("abelian(", 0) == 0 && name.back() == ')') {
    const std::string inner = name.substr(8, name.size() - 9);
    size_t pos = 0;
    int n = 0;
    try {
      n = std::stoi(inner, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("catalog: bad abelian dimension '" + inner + "'");
    }
    if (pos != inner.size()) throw std::invalid_argument("catalog: bad abelian dimension '" + inner + "'");
    return abelian(n);
  }
  throw std::invalid_argument("catalog: unknown algebra '" + name + "'");
}

}  // namespace

LieAlgebra catalog(const std::string& name) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t plus = name.find('+', start);
    parts.push_back(name.substr(start, plus == std::string::npos ? plus : plus - start));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  LieAlgebra g = atom(parts[0]);
  for (size_t k = 1; k < parts.size(); ++k) g = direct_sum(g, atom(parts[k]));
  g.require_valid();
  return g;
}

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"so3", "dim 3, simple, compact type"},
      {"sl2", "dim 3, simple, split type"},
      {"heisenberg", "dim 3, nilpotent ([x,y] = z)"},
      {"aff1", "dim 2, solvable ([a,b] = b)"},
      {"abelian(n)", "dim n, zero bracket (parameterized)"},
      {"g1+g2", "direct sums, e.g. sl2+aff1 (dim 5) or so3+so3 (dim 6)"},
  };
}

Representation sl2_defining_representation() {
  Mat h(2, 2), e(2, 2), f(2, 2);
  h.at(0, 0) = Rat(1);
  h.at(1, 1) = Rat(-1);
  e.at(0, 1) = Rat(1);
  f.at(1, 0) = Rat(1);
  return Representation::make(catalog("sl2"), {h, e, f});
}

Representation so3_defining_representation() { return Representation::adjoint(catalog("so3")); }

}  // namespace nahm
