#pragma once

// One-parameter-subgroup weights on Harder-Narasimhan strata, the bound
// eta, and quantization-inequality verdicts.

#include <map>
#include <vector>

#include "qv/bundle.hpp"
#include "qv/hn.hpp"

namespace qv {

// k_m = c * slope(d^m) with c the least positive integer clearing all
// denominators; k is strictly decreasing.
struct StratumWeights {
  HnType type;
  long long c = 1;
  std::vector<long long> k;
};

StratumWeights stratum_weights(const HnType& type, const Stability& theta);

// weight -> multiplicity, multiplicities positive.
using WeightMultiset = std::map<Rat, long long>;

std::vector<Rat> support(const WeightMultiset& w);
long long total_multiplicity(const WeightMultiset& w);

// Weights of U_i(a): { k_m - sum_j sum_n a_j d^n_j k_n }, the m-th with
// multiplicity d_i^m.
WeightMultiset weights_universal(const StratumWeights& sw, int vertex, const Linearisation& a);
// Union of supports over all vertices, the form weight tables print.
std::vector<Rat> weights_universal_support(const StratumWeights& sw, const Linearisation& a);

// Weights of U_i^dual (x) U_j: { k_m - k_n } with multiplicity d_j^m d_i^n.
WeightMultiset weights_hom(const StratumWeights& sw, int i, int j);
std::vector<Rat> weights_hom_support(const StratumWeights& sw);

// Weight of L(e): -e . (sum_n k_n d^n).
Rat weight_linearised(const StratumWeights& sw, const std::vector<Rat>& twist);

// Tensor words: sums of one weight per atom, multiplicities multiplied.
WeightMultiset weights_expression(const StratumWeights& sw, const BundleExpr& f,
                                  const Linearisation& a);

// eta = sum_{s<t} (k_t - k_s) <d^s, d^t>.
long long eta_bound(const StratumWeights& sw, const Quiver& q);

struct TelemanRow {
  HnType type;
  Rat max_weight;
  Rat eta;
  bool satisfied = false;  // max_weight < eta, strict
  Rat margin;              // eta - max_weight
};

struct TelemanReport {
  BundleExpr bundle;
  std::vector<TelemanRow> rows;  // one per nontrivial HN type
  bool all_satisfied = false;    // certifies H^k = 0 for k >= 1
};

TelemanReport teleman_report(const Quiver& q, const DimVec& d, const Stability& theta,
                             const BundleExpr& f, const Linearisation& a);
// Same, over a precomputed stratum list (shared across many bundles).
TelemanReport teleman_report(const Quiver& q, const std::vector<StratumWeights>& strata,
                             const BundleExpr& f, const Linearisation& a);

std::vector<StratumWeights> stratum_weights_all(const Quiver& q, const DimVec& d,
                                                const Stability& theta);

// Largest integer t per stratum with
//   k_1 - k_l + (t/r) theta_can . (sum_s k_s d^s) < eta,
// and the minimum over strata.
struct TStarReport {
  std::vector<std::pair<HnType, long long>> per_type;
  long long min = 0;
  long long fano_index = 1;
};

TStarReport t_star(const Quiver& q, const DimVec& d);

// True iff min_t equals fano_index - 1.
bool theorem_d_criterion(const Quiver& q, const DimVec& d);

}  // namespace qv
