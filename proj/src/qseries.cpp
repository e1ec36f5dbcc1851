#include "qv/qseries.hpp"

#include <stdexcept>

namespace qv {

QPoly QPoly::monomial(Rat c, int degree) {
  QPoly p;
  if (c.is_zero()) return p;
  p.coeff_.assign(degree + 1, Rat(0));
  p.coeff_[degree] = std::move(c);
  return p;
}

void QPoly::normalize() {
  while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
}

int QPoly::valuation() const {
  for (size_t i = 0; i < coeff_.size(); ++i)
    if (!coeff_[i].is_zero()) return static_cast<int>(i);
  return 0;
}

QPoly QPoly::shifted_down(int e) const {
  if (e == 0) return *this;
  if (valuation() < e) throw std::logic_error("shifted_down: q^e does not divide");
  QPoly p;
  p.coeff_.assign(coeff_.begin() + e, coeff_.end());
  return p;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.coeff_.resize(std::max(a.coeff_.size(), b.coeff_.size()), Rat(0));
  for (size_t i = 0; i < a.coeff_.size(); ++i) r.coeff_[i] += a.coeff_[i];
  for (size_t i = 0; i < b.coeff_.size(); ++i) r.coeff_[i] += b.coeff_[i];
  r.normalize();
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.coeff_.resize(std::max(a.coeff_.size(), b.coeff_.size()), Rat(0));
  for (size_t i = 0; i < a.coeff_.size(); ++i) r.coeff_[i] += a.coeff_[i];
  for (size_t i = 0; i < b.coeff_.size(); ++i) r.coeff_[i] -= b.coeff_[i];
  r.normalize();
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeff_.size(); ++i) {
    if (a.coeff_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeff_.size(); ++j)
      if (!b.coeff_[j].is_zero()) r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
  }
  r.normalize();
  return r;
}

QPoly operator-(const QPoly& a) {
  QPoly r = a;
  for (Rat& c : r.coeff_) c = -c;
  return r;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly r = *this;
  Rat lead = r.coeff_.back();
  for (Rat& c : r.coeff_) c /= lead;
  return r;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (coeff_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += coeff_[i].str();
    if (i > 0) s += "*q^" + std::to_string(i);
  }
  return s;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  QPoly rem = a, quot;
  std::vector<Rat> qc;
  if (rem.degree() >= b.degree()) qc.assign(rem.degree() - b.degree() + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rat f = rem[rem.degree()] / b[b.degree()];
    qc[shift] = f;
    rem = rem - QPoly::monomial(f, shift) * b;
  }
  for (int i = static_cast<int>(qc.size()) - 1; i >= 0; --i)
    quot = quot + QPoly::monomial(qc[i], i);
  return {quot, rem};
}

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r).monic();  // keep coefficients small
  }
  return a.monic();
}

QFrac::QFrac(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void QFrac::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly::monomial(Rat(1), 0);
    return;
  }
  QPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  // Make the denominator monic.
  Rat lead = den_[den_.degree()];
  if (!(lead == Rat(1))) {
    QPoly inv = QPoly::monomial(lead.reciprocal(), 0);
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

QFrac QFrac::q_power(int e) {
  if (e >= 0) return QFrac(QPoly::q_power(e));
  QFrac f;
  f.num_ = QPoly::q_power(0);
  f.den_ = QPoly::q_power(-e);
  return f;
}

QFrac operator+(const QFrac& a, const QFrac& b) {
  return QFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
QFrac operator-(const QFrac& a, const QFrac& b) {
  return QFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
QFrac operator*(const QFrac& a, const QFrac& b) { return QFrac(a.num_ * b.num_, a.den_ * b.den_); }
QFrac operator/(const QFrac& a, const QFrac& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return QFrac(a.num_ * b.den_, a.den_ * b.num_);
}
bool operator==(const QFrac& a, const QFrac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

std::string QFrac::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

}  // namespace qv
