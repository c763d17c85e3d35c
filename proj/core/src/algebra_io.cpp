#include "nahm/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nahm/catalog.hpp"

namespace nahm {

using nlohmann::json;

namespace {

LieAlgebra parse_structure(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw AlgebraIoError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer())
    throw AlgebraIoError("document must be an object with an integer 'dim'");
  const int n = doc["dim"].get<int>();
  if (n < 0) throw AlgebraIoError("'dim' must be nonnegative");
  const std::string name = doc.value("name", std::string("unnamed"));
  LieAlgebra g(name, n);
  for (const auto& entry : doc.value("brackets", json::array())) {
    if (!entry.contains("i") || !entry.contains("j") || !entry.contains("coeffs"))
      throw AlgebraIoError("bracket entry needs 'i', 'j', 'coeffs'");
    const int i = entry["i"].get<int>(), j = entry["j"].get<int>();
    if (i < 1 || i > n || j < 1 || j > n)
      throw AlgebraIoError("bracket index out of range 1.." + std::to_string(n));
    if (i >= j) throw AlgebraIoError("bracket entries require i < j");
    for (const auto& c : entry["coeffs"]) {
      const int k = c.at("k").get<int>();
      if (k < 1 || k > n) throw AlgebraIoError("coefficient index out of range");
      const long num = c.at("num").get<long>();
      const long den = c.at("den").get<long>();
      if (den <= 0) throw AlgebraIoError("denominator must be positive");
      g.set_bracket_coeff(i - 1, j - 1, k - 1, g.c(i - 1, j - 1, k - 1) + Rat(num, den));
    }
  }
  return g;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraIoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

LieAlgebra parse_algebra(const std::string& json_text) {
  LieAlgebra g = parse_structure(json_text);
  const auto rep = g.validate();
  if (!rep.jacobi_ok) {
    const auto& q = rep.jacobi_failures.front();
    std::ostringstream os;
    os << "Jacobi identity fails at basis quadruple (" << q[0] + 1 << "," << q[1] + 1 << ","
       << q[2] + 1 << "," << q[3] + 1 << ")";
    throw AlgebraIoError(os.str());
  }
  return g;
}

LieAlgebra parse_algebra_unchecked(const std::string& json_text) {
  return parse_structure(json_text);
}

LieAlgebra parse_algebra_file(const std::string& path) { return parse_algebra(slurp(path)); }

LieAlgebra parse_algebra_file_unchecked(const std::string& path) {
  return parse_algebra_unchecked(slurp(path));
}

std::string emit_algebra(const LieAlgebra& g) {
  json doc;
  doc["name"] = g.name();
  doc["dim"] = g.dim();
  json brackets = json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      json coeffs = json::array();
      for (int k = 0; k < g.dim(); ++k) {
        const Rat& v = g.c(i, j, k);
        if (v.is_zero()) continue;
        if (!v.num().fits_slong_p() || !v.den().fits_slong_p())
          throw AlgebraIoError("structure constant exceeds the integer range of the format");
        coeffs.push_back({{"k", k + 1}, {"num", v.num().get_si()}, {"den", v.den().get_si()}});
      }
      if (!coeffs.empty()) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
    }
  doc["brackets"] = brackets;
  return doc.dump(2);
}

LieAlgebra load_algebra(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) return catalog(spec.substr(8));
  return parse_algebra_file(spec);
}

}  // namespace nahm
