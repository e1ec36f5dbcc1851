#include "qv/chow.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qv/relations.hpp"
#include "qv/rref.hpp"

namespace qv {

namespace {

std::vector<Mono> monomials_of_degree(const VarLayout& l, int degree) {
  std::vector<Mono> out;
  Mono cur(l.total, 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == l.total) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    int w = l.weights[var];
    for (int e = 0; e * w <= remaining; ++e) {
      cur[var] = e;
      rec(var + 1, remaining - e * w);
    }
    cur[var] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

// Coefficients c_1..c_n of log(x / (1 - e^{-x})) as a power series.
std::vector<Rat> todd_log_series(int n) {
  // S = (1 - e^{-x})/x = sum_{j>=0} (-1)^j x^j / (j+1)!
  std::vector<Rat> s(n + 1, Rat(0));
  Rat fact(1);
  for (int j = 0; j <= n; ++j) {
    fact *= Rat(j + 1);
    s[j] = Rat((j % 2) ? -1 : 1) / fact;
  }
  // T = log(S) with S = 1 + u; log Q = -T.
  std::vector<Rat> u(s);
  u[0] = Rat(0);
  std::vector<Rat> log_s(n + 1, Rat(0));
  std::vector<Rat> upow(n + 1, Rat(0));
  upow[0] = Rat(1);
  for (int k = 1; k <= n; ++k) {
    // upow <- upow * u (truncated)
    std::vector<Rat> next(n + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
      if (upow[i].is_zero()) continue;
      for (int j = 1; i + j <= n; ++j) next[i + j] += upow[i] * u[j];
    }
    upow = std::move(next);
    Rat sign((k % 2) ? 1 : -1);
    for (int i = 1; i <= n; ++i) log_s[i] += sign * upow[i] / Rat(k);
  }
  std::vector<Rat> c(n + 1, Rat(0));
  for (int i = 1; i <= n; ++i) c[i] = -log_s[i];
  return c;
}

}  // namespace

ChowPresentation::ChowPresentation(const Quiver& q, const DimVec& d, const Stability& theta,
                                   const Linearisation& a, bool parallel)
    : q_(q), d_(d), theta_(theta), a_(a), degree_scalar_(1) {
  validate_dimension_vector(q_, d_);
  validate_stability(q_, d_, theta_);
  long long pairing = 0;
  for (size_t i = 0; i < a_.size(); ++i) pairing += a_[i] * d_[i];
  if (pairing != 1) throw std::invalid_argument("linearisation does not satisfy a . d = 1");
  dim_ = moduli_dimension(q_, d_);
  xi_ = VarLayout::chern_classes(d_);
  build(parallel);
}

void ChowPresentation::build(bool parallel) {
  monos_.resize(dim_ + 1);
  mono_index_.resize(dim_ + 1);
  basis_.resize(dim_ + 1);
  basis_pos_.resize(dim_ + 1);
  nf_.resize(dim_ + 1);
  for (int deg = 0; deg <= dim_; ++deg) {
    monos_[deg] = monomials_of_degree(xi_, deg);
    for (size_t i = 0; i < monos_[deg].size(); ++i) mono_index_[deg][monos_[deg][i]] = i;
  }

  std::vector<ZPoly> rels = tautological_relations(q_, d_, theta_, dim_, parallel);
  {
    ZPoly linear(xi_.total);
    for (int i = 0; i < q_.vertex_count(); ++i)
      if (a_[i] != 0) linear += ZPoly::variable(xi_.total, xi_.var(i, 0)).scaled(a_[i]);
    if (!linear.is_zero()) rels.push_back(std::move(linear));
  }
  std::vector<std::vector<ZPoly>> rels_by_deg(dim_ + 1);
  for (ZPoly& r : rels) {
    long long deg = r.homogeneous_degree(xi_);
    if (deg >= 1 && deg <= dim_) rels_by_deg[deg].push_back(std::move(r));
  }

  std::vector<std::vector<SparseRow>> pivot_rows(dim_ + 1);
  for (int deg = 0; deg <= dim_; ++deg) {
    const auto& monos = monos_[deg];
    const auto& index = mono_index_[deg];
    Rref rr(static_cast<int>(monos.size()));

    std::vector<SparseRow> batch;
    // Shifts of lower-degree pivot rows by each generator variable.
    for (int v = 0; v < xi_.total; ++v) {
      int w = xi_.weights[v];
      if (deg - w < 0) continue;
      for (const SparseRow& row : pivot_rows[deg - w]) {
        SparseRow shifted;
        shifted.reserve(row.size());
        for (const auto& [col, coeff] : row) {
          Mono m = monos_[deg - w][col];
          m[v] += 1;
          shifted.emplace_back(index.at(m), coeff);
        }
        std::sort(shifted.begin(), shifted.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        batch.push_back(std::move(shifted));
      }
    }
    // Fresh generators of this exact degree.
    for (const ZPoly& r : rels_by_deg[deg]) {
      SparseRow row;
      row.reserve(r.term_count());
      for (const auto& [m, c] : r.terms()) row.emplace_back(index.at(m), Rat(c));
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      batch.push_back(std::move(row));
    }
    rr.add_rows(batch, parallel);

    basis_pos_[deg].assign(monos.size(), -1);
    for (int col = 0; col < static_cast<int>(monos.size()); ++col) {
      if (rr.is_pivot(col)) continue;
      basis_pos_[deg][col] = static_cast<int>(basis_[deg].size());
      basis_[deg].push_back(col);
    }
    nf_[deg].resize(monos.size());
    for (int col = 0; col < static_cast<int>(monos.size()); ++col) {
      if (basis_pos_[deg][col] >= 0) {
        nf_[deg][col] = {{basis_pos_[deg][col], Rat(1)}};
      } else {
        std::vector<std::pair<int, Rat>> expansion;
        for (const auto& [c2, coeff] : rr.row_for(col)) {
          if (c2 == col) continue;
          expansion.emplace_back(basis_pos_[deg][c2], -coeff);
        }
        nf_[deg][col] = std::move(expansion);
      }
    }
    for (int col : rr.pivot_columns()) pivot_rows[deg].push_back(rr.row_for(col));
  }

  if (basis_[0].size() != 1)
    throw std::domain_error("presentation error: degree-0 piece is not 1-dimensional");
  if (basis_[dim_].size() != 1)
    throw std::domain_error("presentation error: top graded piece is not 1-dimensional");

  // Fix the integration scalar by chi(O) = 1.
  ChowClass td = todd_class();
  const Rat& top = td.coord(dim_, 0);
  if (top.is_zero())
    throw std::domain_error("presentation error: Todd class has vanishing top degree");
  degree_scalar_ = top.reciprocal();
}

std::vector<int> ChowPresentation::basis_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(basis_.size());
  for (const auto& b : basis_) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

ChowClass::ChowClass(const ChowPresentation* p) : p_(p) {
  coords_.resize(p->dim() + 1);
  for (int deg = 0; deg <= p->dim(); ++deg)
    coords_[deg].assign(p->basis(deg).size(), Rat(0));
}

bool ChowClass::is_zero() const {
  for (const auto& block : coords_)
    for (const Rat& c : block)
      if (!c.is_zero()) return false;
  return true;
}

ChowClass ChowClass::component(int degree) const {
  ChowClass r(p_);
  r.coords_[degree] = coords_[degree];
  return r;
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  ChowClass r = a;
  for (size_t deg = 0; deg < r.coords_.size(); ++deg)
    for (size_t i = 0; i < r.coords_[deg].size(); ++i) r.coords_[deg][i] += b.coords_[deg][i];
  return r;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) {
  ChowClass r = a;
  for (size_t deg = 0; deg < r.coords_.size(); ++deg)
    for (size_t i = 0; i < r.coords_[deg].size(); ++i) r.coords_[deg][i] -= b.coords_[deg][i];
  return r;
}

ChowClass ChowClass::scaled(const Rat& c) const {
  ChowClass r = *this;
  for (auto& block : r.coords_)
    for (Rat& x : block) x *= c;
  return r;
}

bool operator==(const ChowClass& a, const ChowClass& b) { return (a - b).is_zero(); }

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  return a.p_->multiply(a, b);
}

ChowClass ChowPresentation::multiply(const ChowClass& a, const ChowClass& b) const {
  ChowClass r(this);
  for (int d1 = 0; d1 <= dim_; ++d1) {
    for (size_t i1 = 0; i1 < a.coords_[d1].size(); ++i1) {
      const Rat& c1 = a.coords_[d1][i1];
      if (c1.is_zero()) continue;
      const Mono& m1 = monos_[d1][basis_[d1][i1]];
      for (int d2 = 0; d1 + d2 <= dim_; ++d2) {
        for (size_t i2 = 0; i2 < b.coords_[d2].size(); ++i2) {
          const Rat& c2 = b.coords_[d2][i2];
          if (c2.is_zero()) continue;
          const Mono& m2 = monos_[d2][basis_[d2][i2]];
          Mono m(xi_.total);
          for (int v = 0; v < xi_.total; ++v) m[v] = m1[v] + m2[v];
          int col = mono_index_[d1 + d2].at(m);
          Rat c = c1 * c2;
          for (const auto& [slot, coeff] : nf_[d1 + d2][col])
            r.coords_[d1 + d2][slot] += c * coeff;
        }
      }
    }
  }
  return r;
}

ChowClass ChowPresentation::zero() const { return ChowClass(this); }

ChowClass ChowPresentation::one() const {
  ChowClass r(this);
  r.coord(0, 0) = Rat(1);
  return r;
}

ChowClass ChowPresentation::reduce(const RPoly& p) const {
  ChowClass r(this);
  for (const auto& [m, c] : p.terms()) {
    long long deg = xi_.degree(m);
    if (deg > dim_) continue;  // truncated away
    int col = mono_index_[deg].at(m);
    for (const auto& [slot, coeff] : nf_[deg][col]) r.coords_[deg][slot] += c * coeff;
  }
  return r;
}

ChowClass ChowPresentation::exp_class(const ChowClass& a) const {
  ChowClass sum = one();
  ChowClass power = one();
  Rat fact(1);
  for (int k = 1; k <= dim_; ++k) {
    power = multiply(power, a);
    if (power.is_zero()) break;
    fact *= Rat(k);
    sum = sum + power.scaled(fact.reciprocal());
  }
  return sum;
}

ChowClass ChowPresentation::ch_atom(const BundleAtom& atom) const {
  if (atom.kind == BundleAtom::Kind::Lin) {
    if (atom.twist.size() != static_cast<size_t>(q_.vertex_count()))
      throw std::invalid_argument("line bundle twist has wrong length");
    // c_1(L(e)) = -sum_i e_i xi_{i,1}
    RPoly c1(xi_.total);
    for (int i = 0; i < q_.vertex_count(); ++i) {
      if (atom.twist[i].is_zero()) continue;
      Mono m(xi_.total, 0);
      m[xi_.var(i, 0)] = 1;
      c1.add_term(m, -atom.twist[i]);
    }
    return exp_class(reduce(c1));
  }

  int g = atom.vertex - 1;
  int dg = d_[g];
  // Power sums in the Chern roots of U_i via Newton's identities.
  std::vector<RPoly> p(dim_ + 1, RPoly(xi_.total));
  auto e_var = [&](int k) {
    RPoly v(xi_.total);
    if (k == 0) {
      v = RPoly::constant(xi_.total, Rat(1));
    } else if (k <= dg) {
      Mono m(xi_.total, 0);
      m[xi_.var(g, k - 1)] = 1;
      v.add_term(m, Rat(1));
    }
    return v;
  };
  for (int k = 1; k <= dim_; ++k) {
    RPoly acc(xi_.total);
    for (int j = 1; j < k; ++j) {
      if (j > dg) break;
      RPoly prod = e_var(j).multiplied(p[k - j], &xi_, dim_);
      acc += (j % 2) ? prod : prod.scaled(Rat(-1));
    }
    if (k <= dg) acc += e_var(k).scaled(Rat((k % 2) ? k : -k));
    p[k] = std::move(acc);
  }

  bool dual = atom.kind == BundleAtom::Kind::Udual;
  RPoly ch = RPoly::constant(xi_.total, Rat(dg));
  Rat fact(1);
  for (int k = 1; k <= dim_; ++k) {
    fact *= Rat(k);
    Rat c = fact.reciprocal();
    if (dual && (k % 2)) c = -c;
    ch += p[k].scaled(c);
  }
  return reduce(ch);
}

ChowClass ChowPresentation::chern_character(const BundleExpr& f) const {
  if (f.lin && *f.lin != a_)
    throw std::invalid_argument("bundle expression linearisation differs from the presentation's");
  ChowClass r = one();
  for (const BundleAtom& atom : f.atoms) r = multiply(r, ch_atom(atom));
  return r;
}

ChowClass ChowPresentation::canonical_class() const {
  Stability can = canonical_stability(q_, d_);
  RPoly p(xi_.total);
  for (int i = 0; i < q_.vertex_count(); ++i) {
    if (can[i] == 0) continue;
    Mono m(xi_.total, 0);
    m[xi_.var(i, 0)] = 1;
    p.add_term(m, Rat(can[i]));
  }
  return reduce(p);
}

ChowClass ChowPresentation::hyperplane_class() const {
  long long r = fano_index(q_, d_);
  return canonical_class().scaled(Rat(-1, r));
}

ChowClass ChowPresentation::todd_class() const {
  if (!todd_cache_.empty()) return todd_cache_.front();
  // ch(T) = 1 - sum_i ch(U_i^dual (x) U_i) + sum_a ch(U_s^dual (x) U_t)
  ChowClass cht = one();
  std::vector<ChowClass> ch_u, ch_ud;
  for (int i = 1; i <= q_.vertex_count(); ++i) {
    BundleAtom u{BundleAtom::Kind::U, i, {}, ""};
    BundleAtom ud{BundleAtom::Kind::Udual, i, {}, ""};
    ch_u.push_back(ch_atom(u));
    ch_ud.push_back(ch_atom(ud));
  }
  for (int i = 0; i < q_.vertex_count(); ++i)
    cht = cht - multiply(ch_ud[i], ch_u[i]);
  for (const Arrow& a : q_.arrows())
    cht = cht + multiply(ch_ud[a.source - 1], ch_u[a.target - 1]);

  std::vector<Rat> series = todd_log_series(dim_);
  ChowClass exponent = zero();
  Rat fact(1);
  for (int m = 1; m <= dim_; ++m) {
    fact *= Rat(m);
    exponent = exponent + cht.component(m).scaled(series[m] * fact);
  }
  ChowClass td = exp_class(exponent);
  todd_cache_.push_back(td);
  return td;
}

Rat ChowPresentation::integrate(const ChowClass& c) const {
  return c.coord(dim_, 0) * degree_scalar_;
}

Rat ChowPresentation::intersection_number(const std::vector<ChowClass>& classes) const {
  ChowClass prod = one();
  for (const ChowClass& c : classes) prod = multiply(prod, c);
  for (int deg = 0; deg < dim_; ++deg)
    if (!prod.component(deg).is_zero())
      throw std::invalid_argument("intersection_number: product degree does not reach the top");
  return integrate(prod);
}

Zint ChowPresentation::euler_characteristic(const BundleExpr& f) const {
  for (const BundleAtom& atom : f.atoms) {
    if (atom.kind != BundleAtom::Kind::Lin) continue;
    Rat pairing(0);
    for (int i = 0; i < q_.vertex_count(); ++i) pairing += atom.twist[i] * Rat(d_[i]);
    if (!pairing.is_zero())
      throw std::invalid_argument("line bundle twist does not descend: e . d != 0");
  }
  Rat chi = integrate(multiply(chern_character(f), todd_class()));
  if (!chi.is_integer())
    throw std::domain_error("non-integral Euler characteristic: inconsistent presentation");
  return chi.numerator();
}

}  // namespace qv
