#include "qv/teleman.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qv {

StratumWeights stratum_weights(const HnType& type, const Stability& theta) {
  StratumWeights sw;
  sw.type = type;
  std::vector<Rat> slopes;
  slopes.reserve(type.parts.size());
  long long c = 1;
  for (const DimVec& part : type.parts) {
    Rat mu = slope(theta, part);
    long long den = mu.denominator().to_long();
    c = std::lcm(c, den);
    slopes.push_back(mu);
  }
  sw.c = c;
  sw.k.reserve(slopes.size());
  for (const Rat& mu : slopes) {
    Rat km = Rat(c) * mu;
    sw.k.push_back(km.numerator().to_long());
  }
  for (size_t m = 0; m + 1 < sw.k.size(); ++m)
    if (sw.k[m] <= sw.k[m + 1]) throw std::invalid_argument("HN type slopes not strictly decreasing");
  return sw;
}

std::vector<Rat> support(const WeightMultiset& w) {
  std::vector<Rat> s;
  s.reserve(w.size());
  for (const auto& [weight, mult] : w) s.push_back(weight);
  return s;
}

long long total_multiplicity(const WeightMultiset& w) {
  long long t = 0;
  for (const auto& [weight, mult] : w) t += mult;
  return t;
}

namespace {

// sum_j a_j sum_n d^n_j k_n, the linearisation offset of U_i(a).
long long universal_offset(const StratumWeights& sw, const Linearisation& a) {
  long long off = 0;
  for (size_t j = 0; j < a.size(); ++j) {
    long long col = 0;
    for (size_t n = 0; n < sw.k.size(); ++n) col += static_cast<long long>(sw.type.parts[n][j]) * sw.k[n];
    off += a[j] * col;
  }
  return off;
}

}  // namespace

WeightMultiset weights_universal(const StratumWeights& sw, int vertex, const Linearisation& a) {
  long long off = universal_offset(sw, a);
  WeightMultiset w;
  for (size_t m = 0; m < sw.k.size(); ++m) {
    long long mult = sw.type.parts[m][vertex - 1];
    if (mult > 0) w[Rat(sw.k[m] - off)] += mult;
  }
  return w;
}

std::vector<Rat> weights_universal_support(const StratumWeights& sw, const Linearisation& a) {
  WeightMultiset all;
  for (size_t i = 1; i <= sw.type.parts[0].size(); ++i)
    for (const auto& [weight, mult] : weights_universal(sw, static_cast<int>(i), a))
      all[weight] += mult;
  return support(all);
}

WeightMultiset weights_hom(const StratumWeights& sw, int i, int j) {
  WeightMultiset w;
  for (size_t m = 0; m < sw.k.size(); ++m)
    for (size_t n = 0; n < sw.k.size(); ++n) {
      long long mult = static_cast<long long>(sw.type.parts[m][j - 1]) * sw.type.parts[n][i - 1];
      if (mult > 0) w[Rat(sw.k[m] - sw.k[n])] += mult;
    }
  return w;
}

std::vector<Rat> weights_hom_support(const StratumWeights& sw) {
  WeightMultiset all;
  size_t n = sw.type.parts[0].size();
  for (size_t i = 1; i <= n; ++i)
    for (size_t j = 1; j <= n; ++j)
      for (const auto& [weight, mult] : weights_hom(sw, static_cast<int>(i), static_cast<int>(j)))
        all[weight] += mult;
  return support(all);
}

Rat weight_linearised(const StratumWeights& sw, const std::vector<Rat>& twist) {
  Rat w(0);
  for (size_t i = 0; i < twist.size(); ++i) {
    long long col = 0;
    for (size_t n = 0; n < sw.k.size(); ++n) col += static_cast<long long>(sw.type.parts[n][i]) * sw.k[n];
    w -= twist[i] * Rat(col);
  }
  return w;
}

WeightMultiset weights_expression(const StratumWeights& sw, const BundleExpr& f,
                                  const Linearisation& a) {
  const Linearisation& lin = f.lin ? *f.lin : a;
  WeightMultiset acc;
  acc[Rat(0)] = 1;
  for (const BundleAtom& atom : f.atoms) {
    WeightMultiset atom_w;
    switch (atom.kind) {
      case BundleAtom::Kind::U:
        atom_w = weights_universal(sw, atom.vertex, lin);
        break;
      case BundleAtom::Kind::Udual:
        for (const auto& [weight, mult] : weights_universal(sw, atom.vertex, lin))
          atom_w[-weight] += mult;
        break;
      case BundleAtom::Kind::Lin:
        atom_w[weight_linearised(sw, atom.twist)] = 1;
        break;
    }
    WeightMultiset next;
    for (const auto& [w1, m1] : acc)
      for (const auto& [w2, m2] : atom_w) next[w1 + w2] += m1 * m2;
    acc = std::move(next);
  }
  return acc;
}

long long eta_bound(const StratumWeights& sw, const Quiver& q) {
  long long eta = 0;
  for (size_t s = 0; s < sw.k.size(); ++s)
    for (size_t t = s + 1; t < sw.k.size(); ++t)
      eta += (sw.k[t] - sw.k[s]) * euler_form(q, sw.type.parts[s], sw.type.parts[t]);
  return eta;
}

std::vector<StratumWeights> stratum_weights_all(const Quiver& q, const DimVec& d,
                                                const Stability& theta) {
  std::vector<StratumWeights> out;
  for (const HnType& t : unstable_hn_types(q, d, theta)) out.push_back(stratum_weights(t, theta));
  return out;
}

TelemanReport teleman_report(const Quiver& q, const std::vector<StratumWeights>& strata,
                             const BundleExpr& f, const Linearisation& a) {
  TelemanReport rep;
  rep.bundle = f;
  rep.all_satisfied = true;
  rep.rows.reserve(strata.size());
  for (const StratumWeights& sw : strata) {
    WeightMultiset w = weights_expression(sw, f, a);
    if (w.empty()) throw std::logic_error("bundle has empty weight multiset on a stratum");
    TelemanRow row;
    row.type = sw.type;
    row.max_weight = w.rbegin()->first;
    row.eta = Rat(eta_bound(sw, q));
    row.satisfied = row.max_weight < row.eta;
    row.margin = row.eta - row.max_weight;
    rep.all_satisfied = rep.all_satisfied && row.satisfied;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

TelemanReport teleman_report(const Quiver& q, const DimVec& d, const Stability& theta,
                             const BundleExpr& f, const Linearisation& a) {
  return teleman_report(q, stratum_weights_all(q, d, theta), f, a);
}

TStarReport t_star(const Quiver& q, const DimVec& d) {
  Stability theta = canonical_stability(q, d);
  TStarReport rep;
  rep.fano_index = fano_index(q, d);
  bool first = true;
  for (const StratumWeights& sw : stratum_weights_all(q, d, theta)) {
    long long diff = sw.k.front() - sw.k.back();
    long long eta = eta_bound(sw, q);
    // (1/r) theta . sum_s k_s d^s: strictly positive on nontrivial strata.
    Rat coeff(0);
    for (size_t i = 0; i < theta.size(); ++i) {
      long long col = 0;
      for (size_t n = 0; n < sw.k.size(); ++n)
        col += static_cast<long long>(sw.type.parts[n][i]) * sw.k[n];
      coeff += Rat(theta[i]) * Rat(col);
    }
    coeff = coeff / Rat(rep.fano_index);
    if (!(coeff > Rat(0))) throw std::logic_error("t_star: nonpositive twist coefficient");
    // Largest integer t with diff + t * coeff < eta.
    Rat bound = (Rat(eta) - Rat(diff)) / coeff;
    Zint t = bound.floor();
    if (Rat(t) == bound) t = t - Zint(1);  // strict inequality
    long long tv = t.to_long();
    rep.per_type.emplace_back(sw.type, tv);
    if (first || tv < rep.min) rep.min = tv;
    first = false;
  }
  if (first) rep.min = rep.fano_index - 1;  // no unstable strata at all
  return rep;
}

bool theorem_d_criterion(const Quiver& q, const DimVec& d) {
  TStarReport rep = t_star(q, d);
  return rep.min >= rep.fano_index - 1;
}

}  // namespace qv
