#include "qv/arith.hpp"

#include <ostream>
#include <stdexcept>

namespace qv {

void Zint::throw_parse(const std::string& s) {
  throw std::invalid_argument("not an integer literal: '" + s + "'");
}

Rat::Rat(const Zint& num, const Zint& den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  mpq_init(v_);
  mpq_set_num(v_, num.raw());
  mpq_set_den(v_, den.raw());
  mpq_canonicalize(v_);
}

Rat::Rat(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  mpq_init(v_);
  Zint n(num), d(den);
  mpq_set_num(v_, n.raw());
  mpq_set_den(v_, d.raw());
  mpq_canonicalize(v_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational");
  Rat r;
  mpq_div(r.v_, a.v_, b.v_);
  return r;
}

Rat Rat::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  Rat r;
  mpq_inv(r.v_, v_);
  return r;
}

std::string Rat::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Zint& z) { return os << z.str(); }
std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace qv
