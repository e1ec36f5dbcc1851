#pragma once

// Sparse multivariate polynomials with exact coefficients, over a fixed
// finite variable set. Variables carry weights (the Chern class xi_{i,k}
// has degree k); plain root variables all have weight 1.

#include <map>
#include <string>
#include <vector>

#include "qv/arith.hpp"

namespace qv {

using Mono = std::vector<int>;  // exponent vector; lex-ordered map keys

// Groups of variables, one group per quiver vertex.
struct VarLayout {
  std::vector<int> group_sizes;  // one entry per vertex
  std::vector<int> offsets;      // start of each group
  std::vector<int> weights;      // degree of each variable
  int total = 0;

  static VarLayout roots(const std::vector<int>& sizes);        // weight 1 each
  static VarLayout chern_classes(const std::vector<int>& sizes);  // weights 1..d_i

  int var(int group, int index_in_group) const { return offsets[group] + index_in_group; }
  long long degree(const Mono& m) const;
};

template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, T c) {
    Poly p(nvars);
    if (!(c == T(0))) p.terms_.emplace(Mono(nvars, 0), std::move(c));
    return p;
  }
  static Poly variable(int nvars, int v, T c = T(1)) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m[v] = 1;
    p.add_term(m, std::move(c));
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Mono, T>& terms() const { return terms_; }

  void add_term(const Mono& m, T c) {
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == T(0)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, T(0) - c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly scaled(const T& c) const {
    Poly r(nvars_);
    if (c == T(0)) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
  }

  // Product, dropping terms of weighted degree above `maxdeg` when a layout
  // is given (maxdeg < 0 disables truncation).
  Poly multiplied(const Poly& o, const VarLayout* layout = nullptr, long long maxdeg = -1) const {
    Poly r(nvars_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        Mono m(nvars_);
        for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
        if (layout && maxdeg >= 0 && layout->degree(m) > maxdeg) continue;
        r.add_term(m, c1 * c2);
      }
    return r;
  }

  // All terms share one weighted degree for the homogeneous inputs used
  // here; returns -1 for the zero polynomial.
  long long homogeneous_degree(const VarLayout& layout) const {
    if (terms_.empty()) return -1;
    return layout.degree(terms_.begin()->first);
  }

  template <typename U, typename F>
  Poly<U> mapped(F&& f) const {
    Poly<U> r(nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

 private:
  int nvars_ = 0;
  std::map<Mono, T> terms_;
};

using ZPoly = Poly<long long>;
using RPoly = Poly<Rat>;

}  // namespace qv
