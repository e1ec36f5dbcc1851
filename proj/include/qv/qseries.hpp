#pragma once

// Exact univariate polynomials and rational functions in the counting
// variable q. No truncation: the Harder-Narasimhan recursion is carried
// out in the fraction field and cleared to a polynomial at the very end.

#include <vector>

#include "qv/arith.hpp"

namespace qv {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Rat c) {
    if (!c.is_zero()) coeff_.push_back(std::move(c));
  }
  static QPoly monomial(Rat c, int degree);
  static QPoly q_power(int degree) { return monomial(Rat(1), degree); }

  bool is_zero() const { return coeff_.empty(); }
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }  // -1 for zero
  const Rat& operator[](int i) const { return coeff_[i]; }
  const std::vector<Rat>& coefficients() const { return coeff_; }

  // Largest e with q^e dividing the polynomial (0 for the zero polynomial).
  int valuation() const;
  QPoly shifted_down(int e) const;  // divide by q^e; requires valuation >= e

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeff_ == b.coeff_; }

  QPoly monic() const;
  std::string str() const;

 private:
  void normalize();
  std::vector<Rat> coeff_;  // coeff_[i] multiplies q^i; trailing zeros stripped
};

// Euclidean division and gcd over Q[q].
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly poly_gcd(QPoly a, QPoly b);

// Fraction num/den, reduced, denominator monic.
class QFrac {
 public:
  QFrac() : num_(), den_(QPoly::monomial(Rat(1), 0)) {}
  explicit QFrac(QPoly p) : num_(std::move(p)), den_(QPoly::monomial(Rat(1), 0)) {}
  QFrac(QPoly num, QPoly den);

  static QFrac q_power(int e);  // q^e, e may be negative

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend QFrac operator+(const QFrac& a, const QFrac& b);
  friend QFrac operator-(const QFrac& a, const QFrac& b);
  friend QFrac operator*(const QFrac& a, const QFrac& b);
  friend QFrac operator/(const QFrac& a, const QFrac& b);
  friend bool operator==(const QFrac& a, const QFrac& b);

  std::string str() const;

 private:
  void reduce();
  QPoly num_, den_;
};

}  // namespace qv
