#include "qv/betti.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qv/qseries.hpp"

namespace qv {

namespace {

// Counting series of the full stack of representations of dimension e,
// cleared of negative q-powers:
//   g_e = q^{T(e) - <e,e>} / prod_i prod_{k<=e_i} (q^k - 1),
// with T(e) = sum_i e_i (e_i + 1) / 2.
class HnSeries {
 public:
  HnSeries(const Quiver& q, const Stability& theta) : q_(q), theta_(theta) {}

  const QFrac& a(const DimVec& e) {
    auto it = a_memo_.find(e);
    if (it != a_memo_.end()) return it->second;

    QFrac value = g(e);
    const DimVec zero(e.size(), 0);
    for (const DimVec& f : subdimension_box(e)) {
      if (f == zero || f == e) continue;
      DimVec rest(e.size());
      for (size_t i = 0; i < e.size(); ++i) rest[i] = e[i] - f[i];
      long long twist = -euler_form(q_, rest, f);
      QFrac term = QFrac::q_power(static_cast<int>(twist)) * a(f) * tail(rest, slope(theta_, f));
      value = value - term;
    }
    return a_memo_.emplace(e, std::move(value)).first->second;
  }

 private:
  QFrac g(const DimVec& e) const {
    long long exp = -euler_form(q_, e, e);
    QPoly den = QPoly::q_power(0);
    for (int ei : e)
      for (int k = 1; k <= ei; ++k) {
        exp += k;
        den = den * (QPoly::q_power(k) - QPoly::q_power(0));
      }
    QFrac f(QPoly::q_power(0), den);
    return QFrac::q_power(static_cast<int>(exp)) * f;
  }

  // Sum over slope-decreasing decompositions of e with all slopes < bound.
  QFrac tail(const DimVec& e, const Rat& bound) {
    auto key = std::make_pair(e, bound);
    auto it = s_memo_.find(key);
    if (it != s_memo_.end()) return it->second;

    QFrac value;
    const DimVec zero(e.size(), 0);
    for (const DimVec& f : subdimension_box(e)) {
      if (f == zero) continue;
      Rat mu = slope(theta_, f);
      if (!(mu < bound)) continue;
      if (f == e) {
        value = value + a(f);
        continue;
      }
      DimVec rest(e.size());
      for (size_t i = 0; i < e.size(); ++i) rest[i] = e[i] - f[i];
      long long twist = -euler_form(q_, rest, f);
      value = value + QFrac::q_power(static_cast<int>(twist)) * a(f) * tail(rest, mu);
    }
    return s_memo_.emplace(std::move(key), std::move(value)).first->second;
  }

  const Quiver& q_;
  const Stability& theta_;
  std::map<DimVec, QFrac> a_memo_;
  std::map<std::pair<DimVec, Rat>, QFrac> s_memo_;
};

}  // namespace

long long PoincarePolynomial::sum() const {
  long long s = 0;
  for (long long x : b) s += x;
  return s;
}

PoincarePolynomial poincare_polynomial(const Quiver& q, const DimVec& d, const Stability& theta) {
  validate_dimension_vector(q, d);
  validate_stability(q, d, theta);

  HnSeries series(q, theta);
  QFrac stack = series.a(d);
  QFrac cleared = stack * QFrac(QPoly::q_power(1) - QPoly::q_power(0));

  // The result must be a Laurent polynomial: denominator a power of q.
  const QPoly& den = cleared.den();
  if (den.valuation() != den.degree())
    throw std::domain_error("counting series did not clear to a polynomial");
  QPoly poly = cleared.num().shifted_down(cleared.num().valuation());

  int dim = moduli_dimension(q, d);
  if (poly.degree() != dim)
    throw std::domain_error("counting polynomial degree does not match moduli dimension");

  PoincarePolynomial result;
  result.b.reserve(dim + 1);
  for (int i = 0; i <= dim; ++i) {
    const Rat& c = poly[i];
    if (!c.is_integer() || c.sign() < 0)
      throw std::domain_error("counting polynomial has a non-integral or negative coefficient");
    result.b.push_back(c.numerator().to_long());
  }
  if (result.b[0] != 1) {
    std::reverse(result.b.begin(), result.b.end());
    if (result.b[0] != 1)
      throw std::domain_error("counting polynomial is not normalized at degree zero");
  }
  for (int k = 0; k <= dim; ++k)
    if (result.b[k] != result.b[dim - k])
      throw std::domain_error("counting polynomial violates Poincare duality");
  return result;
}

long long hochschild_zero(const Quiver& q, const DimVec& d, const Stability& theta) {
  return poincare_polynomial(q, d, theta).sum();
}

long long picard_rank(const Quiver& q, const DimVec& d, const Stability& theta) {
  PoincarePolynomial p = poincare_polynomial(q, d, theta);
  if (p.degree() < 1) throw std::domain_error("picard_rank: zero-dimensional moduli space");
  return p.b[1];
}

bool counting_series_nonzero(const Quiver& q, const DimVec& e, const Stability& theta) {
  HnSeries series(q, theta);
  return !series.a(e).is_zero();
}

}  // namespace qv
