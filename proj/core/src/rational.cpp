#include "nahm/rational.hpp"

#include <cmath>
#include <ostream>

namespace nahm {

Rat::Rat(long n, long d) {
  if (d == 0) throw std::invalid_argument("Rat: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw std::invalid_argument("Rat: cannot parse '" + text + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + text + "'");
  v.canonicalize();
  return Rat(std::move(v));
}

Rat Rat::from_double(double x, long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("Rat::from_double: non-finite input");
  if (max_den < 1) throw std::invalid_argument("Rat::from_double: max_den < 1");
  // Continued-fraction convergents p_k/q_k of x, stopped at the denominator bound.
  const bool neg = x < 0;
  double a = std::abs(x);
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(a);
    if (fl > 9e17) break;
    const long ai = static_cast<long>(fl);
    if (q1 != 0 && ai > (max_den - q0) / q1) break;  // next q would exceed bound
    const long p2 = ai * p1 + p0;
    const long q2 = ai * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double frac = a - fl;
    if (frac < 1e-15 * std::max(1.0, std::abs(x))) break;
    a = 1.0 / frac;
  }
  if (q1 == 0) return Rat(0);
  Rat r(p1, q1);
  return neg ? -r : r;
}

std::string Rat::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec+: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec-: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rat& s, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace nahm
