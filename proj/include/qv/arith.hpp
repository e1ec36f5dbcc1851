#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals
// backed by GMP. Everything downstream (slopes, weights, Chow coefficients,
// counting series) stays exact; no floating point anywhere in the library.

#include <gmp.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <numeric>
#include <string>
#include <utility>

namespace qv {

class Zint {
 public:
  Zint() { mpz_init(v_); }
  Zint(int x) { mpz_init_set_si(v_, x); }
  Zint(long x) { mpz_init_set_si(v_, x); }
  Zint(long long x) {
    mpz_init(v_);
    bool neg = x < 0;
    unsigned long long ux = neg ? -static_cast<unsigned long long>(x) : x;
    mpz_import(v_, 1, 1, sizeof(ux), 0, 0, &ux);
    if (neg) mpz_neg(v_, v_);
  }
  Zint(const Zint& o) { mpz_init_set(v_, o.v_); }
  Zint(Zint&& o) noexcept {
    mpz_init(v_);
    mpz_swap(v_, o.v_);
  }
  ~Zint() { mpz_clear(v_); }

  Zint& operator=(const Zint& o) {
    if (this != &o) mpz_set(v_, o.v_);
    return *this;
  }
  Zint& operator=(Zint&& o) noexcept {
    mpz_swap(v_, o.v_);
    return *this;
  }

  static Zint from_string(const std::string& s) {
    Zint z;
    if (mpz_set_str(z.v_, s.c_str(), 10) != 0) throw_parse(s);
    return z;
  }

  friend Zint operator+(const Zint& a, const Zint& b) {
    Zint r;
    mpz_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend Zint operator-(const Zint& a, const Zint& b) {
    Zint r;
    mpz_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend Zint operator*(const Zint& a, const Zint& b) {
    Zint r;
    mpz_mul(r.v_, a.v_, b.v_);
    return r;
  }
  friend Zint operator-(const Zint& a) {
    Zint r;
    mpz_neg(r.v_, a.v_);
    return r;
  }
  Zint& operator+=(const Zint& o) {
    mpz_add(v_, v_, o.v_);
    return *this;
  }
  Zint& operator-=(const Zint& o) {
    mpz_sub(v_, v_, o.v_);
    return *this;
  }
  Zint& operator*=(const Zint& o) {
    mpz_mul(v_, v_, o.v_);
    return *this;
  }

  // Exact division; quotient must be integral.
  friend Zint div_exact(const Zint& a, const Zint& b) {
    Zint r;
    mpz_divexact(r.v_, a.v_, b.v_);
    return r;
  }
  friend Zint gcd(const Zint& a, const Zint& b) {
    Zint r;
    mpz_gcd(r.v_, a.v_, b.v_);
    return r;
  }
  friend Zint lcm(const Zint& a, const Zint& b) {
    Zint r;
    mpz_lcm(r.v_, a.v_, b.v_);
    return r;
  }
  // Floor division.
  friend Zint fdiv(const Zint& a, const Zint& b) {
    Zint r;
    mpz_fdiv_q(r.v_, a.v_, b.v_);
    return r;
  }

  int sign() const { return mpz_sgn(v_); }
  bool is_zero() const { return mpz_sgn(v_) == 0; }
  bool is_one() const { return mpz_cmp_si(v_, 1) == 0; }

  friend int cmp(const Zint& a, const Zint& b) { return mpz_cmp(a.v_, b.v_); }
  friend bool operator==(const Zint& a, const Zint& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Zint& a, const Zint& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Zint& a, const Zint& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Zint& a, const Zint& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Zint& a, const Zint& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Zint& a, const Zint& b) { return cmp(a, b) >= 0; }

  bool fits_slong() const { return mpz_fits_slong_p(v_) != 0; }
  long to_long() const { return mpz_get_si(v_); }

  std::string str() const {
    char* raw = mpz_get_str(nullptr, 10, v_);
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
  }

  const mpz_t& raw() const { return v_; }
  mpz_t& raw() { return v_; }

 private:
  static void throw_parse(const std::string& s);
  mpz_t v_;
};

class Rat {
 public:
  Rat() { mpq_init(v_); }
  Rat(long x) {
    mpq_init(v_);
    mpq_set_si(v_, x, 1);
  }
  Rat(int x) : Rat(static_cast<long>(x)) {}
  Rat(long long x) : Rat(x, 1) {}
  Rat(long long num, long long den);
  Rat(const Zint& num, const Zint& den);
  explicit Rat(const Zint& z) {
    mpq_init(v_);
    mpq_set_z(v_, z.raw());
  }
  Rat(const Rat& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rat(Rat&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  ~Rat() { mpq_clear(v_); }

  Rat& operator=(const Rat& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    Rat r;
    mpq_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    Rat r;
    mpq_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    Rat r;
    mpq_mul(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) {
    Rat r;
    mpq_neg(r.v_, a.v_);
    return r;
  }
  Rat& operator+=(const Rat& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  int sign() const { return mpq_sgn(v_); }
  bool is_zero() const { return mpq_sgn(v_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

  Zint numerator() const {
    Zint z;
    mpz_set(z.raw(), mpq_numref(v_));
    return z;
  }
  Zint denominator() const {
    Zint z;
    mpz_set(z.raw(), mpq_denref(v_));
    return z;
  }
  // Largest integer <= value.
  Zint floor() const {
    Zint z;
    mpz_fdiv_q(z.raw(), mpq_numref(v_), mpq_denref(v_));
    return z;
  }
  Rat reciprocal() const;

  friend int cmp(const Rat& a, const Rat& b) { return mpq_cmp(a.v_, b.v_); }
  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_, b.v_) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

  // Renders "p/q" with q > 0 and gcd(p, q) = 1; integers omit "/1".
  std::string str() const;

  const mpq_t& raw() const { return v_; }

 private:
  mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Zint& z);
std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace qv
