#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "qv/teleman.hpp"

#include "reference_tables.hpp"

using namespace qv;

namespace {

const Stability kTheta = {12, -9};
const Linearisation kLin = {3, -2};

std::vector<Rat> to_rats(const std::vector<long long>& v) {
  std::vector<Rat> out;
  for (long long x : v) out.push_back(Rat(x));
  return out;
}

std::vector<Rat> theta_can_over_r() { return {Rat(4), Rat(-3)}; }

}  // namespace

TEST_CASE("stratum weights: clearing denominators") {
  SUBCASE("mixed denominators") {
    StratumWeights sw = stratum_weights(HnType{{{1, 1}, {2, 3}}}, kTheta);
    CHECK(sw.c == 10);
    CHECK(sw.k == std::vector<long long>{15, -6});
  }
  SUBCASE("already integral") {
    StratumWeights sw = stratum_weights(HnType{{{3, 0}, {0, 4}}}, kTheta);
    CHECK(sw.c == 1);
    CHECK(sw.k == std::vector<long long>{12, -9});
  }
  SUBCASE("trivial type") {
    StratumWeights sw = stratum_weights(HnType{{{3, 4}}}, kTheta);
    CHECK(sw.c == 1);
    CHECK(sw.k == std::vector<long long>{0});
  }
}

TEST_CASE("weight tables reproduce the published 3-Kronecker table") {
  Quiver q = kronecker_quiver(3);
  for (const qv_testdata::Table1Row& row : qv_testdata::table1()) {
    StratumWeights sw = stratum_weights(HnType{row.type}, kTheta);
    CAPTURE(to_string(HnType{row.type}));
    CHECK(weights_hom_support(sw) == to_rats(row.hom));
    CHECK(weights_universal_support(sw, kLin) == to_rats(row.univ));
    CHECK(weight_linearised(sw, theta_can_over_r()) == Rat(row.lin));
    CHECK(eta_bound(sw, q) == row.eta);
  }
}

TEST_CASE("per-vertex universal weights carry multiplicities") {
  StratumWeights sw = stratum_weights(HnType{{{1, 1}, {2, 3}}}, kTheta);
  WeightMultiset w1 = weights_universal(sw, 1, kLin);
  REQUIRE(w1.size() == 2);
  CHECK(w1[Rat(0)] == 1);
  CHECK(w1[Rat(-21)] == 2);
  CHECK(total_multiplicity(w1) == 3);
  WeightMultiset w2 = weights_universal(sw, 2, kLin);
  CHECK(w2[Rat(0)] == 1);
  CHECK(w2[Rat(-21)] == 3);
  CHECK(total_multiplicity(w2) == 4);

  // Trivial type: single weight zero with multiplicity d_i.
  StratumWeights triv = stratum_weights(HnType{{{3, 4}}}, kTheta);
  WeightMultiset wt = weights_universal(triv, 1, kLin);
  REQUIRE(wt.size() == 1);
  CHECK(wt[Rat(0)] == 3);
}

TEST_CASE("hom weights: multiplicities, antisymmetry, independence of the linearisation") {
  StratumWeights sw = stratum_weights(HnType{{{1, 1}, {2, 3}}}, kTheta);
  WeightMultiset w12 = weights_hom(sw, 1, 2);
  CHECK(total_multiplicity(w12) == 3 * 4);

  // Antisymmetry: W(U_i^dual (x) U_j) = -W(U_j^dual (x) U_i).
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      WeightMultiset a = weights_hom(sw, i, j);
      WeightMultiset b = weights_hom(sw, j, i);
      WeightMultiset neg;
      for (const auto& [w, m] : b) neg[-w] += m;
      CHECK(a == neg);
    }

  // Same multiset through the expression evaluator, for two linearisations.
  Linearisation other = {-1, 1};
  BundleExpr hom = bundle_Udual(1) * bundle_U(2);
  CHECK(weights_expression(sw, hom, kLin) == w12);
  CHECK(weights_expression(sw, hom, other) == w12);

  // i = j on the trivial type: {0} with multiplicity d_i^2.
  StratumWeights triv = stratum_weights(HnType{{{3, 4}}}, kTheta);
  WeightMultiset self = weights_hom(triv, 1, 1);
  REQUIRE(self.size() == 1);
  CHECK(self[Rat(0)] == 9);
}

TEST_CASE("linearised weights") {
  StratumWeights triv = stratum_weights(HnType{{{3, 4}}}, kTheta);
  CHECK(weight_linearised(triv, {Rat(7), Rat(11)}) == Rat(0));

  // Additivity L(e) (x) L(e') = L(e + e').
  StratumWeights sw = stratum_weights(HnType{{{1, 1}, {2, 3}}}, kTheta);
  std::vector<Rat> e1 = {Rat(4), Rat(-3)}, e2 = {Rat(1), Rat(2)};
  std::vector<Rat> sum = {Rat(5), Rat(-1)};
  CHECK(weight_linearised(sw, e1) + weight_linearised(sw, e2) == weight_linearised(sw, sum));

  // Strict negativity of the H twist on every nontrivial stratum.
  Quiver q = kronecker_quiver(3);
  for (const StratumWeights& s : stratum_weights_all(q, {3, 4}, kTheta))
    CHECK(weight_linearised(s, theta_can_over_r()) < Rat(0));
}

TEST_CASE("expression weights: twisting shifts by the line weight") {
  StratumWeights sw = stratum_weights(HnType{{{1, 1}, {2, 3}}}, kTheta);
  // U_1 (x) L(-theta_can/3): supports {-21, 0} + 21 = {0, 21}.
  std::vector<Rat> minus = {Rat(-4), Rat(3)};
  BundleExpr f = bundle_U(1) * bundle_L(minus);
  WeightMultiset w = weights_expression(sw, f, kLin);
  CHECK(support(w) == std::vector<Rat>{Rat(0), Rat(21)});
}

TEST_CASE("eta is nonnegative across all strata") {
  Quiver q = kronecker_quiver(3);
  for (const StratumWeights& s : stratum_weights_all(q, {3, 4}, kTheta))
    CHECK(eta_bound(s, q) >= 0);
  Quiver q5(3, {{1, 2}, {1, 3}, {1, 3}, {2, 3}, {2, 3}, {2, 3}, {2, 3}});
  DimVec d5 = {1, 1, 1};
  for (const StratumWeights& s : stratum_weights_all(q5, d5, canonical_stability(q5, d5)))
    CHECK(eta_bound(s, q5) >= 0);
}

TEST_CASE("teleman reports for the hom twists of the 12-dimensional example") {
  Quiver q = kronecker_quiver(3);
  DimVec d = {3, 4};
  auto strata = stratum_weights_all(q, d, kTheta);

  // s = 1 passes on all 18 strata.
  {
    bool all = true;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        BundleExpr f = bundle_Udual(i) * bundle_U(j) * bundle_OH(q, d, -1);
        all = all && teleman_report(q, strata, f, kLin).all_satisfied;
      }
    CHECK(all);
  }
  // s = 2 hits the bound on the stratum ((3,3),(0,1)): for the pair
  // (i, j) = (2, 1) the maximum is 21 + 126 = 147 >= 126 = eta. The
  // published account keeps only the dual-universal twists as failures;
  // the bound computed from the table's own row data rules this one out
  // as well.
  {
    BundleExpr f = bundle_Udual(2) * bundle_U(1) * bundle_OH(q, d, -2);
    TelemanReport rep = teleman_report(q, strata, f, kLin);
    CHECK_FALSE(rep.all_satisfied);
    int failures = 0;
    for (const TelemanRow& row : rep.rows) {
      if (row.satisfied) continue;
      ++failures;
      CHECK(row.type.parts == std::vector<DimVec>{{3, 3}, {0, 1}});
      CHECK(row.max_weight == Rat(147));
      CHECK(row.eta == Rat(126));
    }
    CHECK(failures == 1);
  }
  // The dual universal bundle of the sink vertex twisted by -H saturates
  // the bound on ((3,3),(0,1)); the source vertex passes at -H because its
  // weights on that stratum miss the lowest part, and fails only at -2H.
  {
    CHECK_FALSE(teleman_report(q, strata, bundle_Udual(2) * bundle_OH(q, d, -1), kLin)
                    .all_satisfied);
    CHECK(teleman_report(q, strata, bundle_Udual(1) * bundle_OH(q, d, -1), kLin).all_satisfied);
    CHECK_FALSE(teleman_report(q, strata, bundle_Udual(1) * bundle_OH(q, d, -2), kLin)
                    .all_satisfied);
    CHECK_FALSE(teleman_report(q, strata, bundle_Udual(2) * bundle_OH(q, d, -2), kLin)
                    .all_satisfied);
  }
  // U_i(-H) and U_i(-2H) pass everywhere.
  for (int s = 1; s <= 2; ++s)
    for (int i = 1; i <= 2; ++i) {
      BundleExpr f = bundle_U(i) * bundle_OH(q, d, -s);
      CHECK(teleman_report(q, strata, f, kLin).all_satisfied);
    }
}

TEST_CASE("verdicts are invariant under scaling the one-parameter subgroup") {
  Quiver q = kronecker_quiver(3);
  DimVec d = {3, 4};
  auto strata = stratum_weights_all(q, d, kTheta);
  BundleExpr f = bundle_Udual(1) * bundle_U(2) * bundle_OH(q, d, -1);
  for (long long lambda : {2LL, 7LL}) {
    for (StratumWeights sw : strata) {
      TelemanRow base;
      {
        TelemanReport rep = teleman_report(q, {sw}, f, kLin);
        base = rep.rows[0];
      }
      StratumWeights scaled = sw;
      scaled.c *= lambda;
      for (long long& k : scaled.k) k *= lambda;
      TelemanReport rep = teleman_report(q, {scaled}, f, kLin);
      CHECK(rep.rows[0].satisfied == base.satisfied);
      CHECK(rep.rows[0].max_weight == base.max_weight * Rat(lambda));
      CHECK(rep.rows[0].eta == base.eta * Rat(lambda));
    }
  }
}

TEST_CASE("twisting by H preserves satisfied teleman reports") {
  Quiver q = kronecker_quiver(3);
  DimVec d = {3, 4};
  auto strata = stratum_weights_all(q, d, kTheta);
  std::vector<BundleExpr> bundles = {bundle_O(), bundle_U(1), bundle_U(2),
                                     bundle_Udual(1) * bundle_U(2),
                                     bundle_U(1) * bundle_OH(q, d, -1)};
  for (const BundleExpr& f : bundles) {
    if (!teleman_report(q, strata, f, kLin).all_satisfied) continue;
    BundleExpr twisted = f * bundle_OH(q, d, 1);
    CHECK(teleman_report(q, strata, twisted, kLin).all_satisfied);
  }
}

TEST_CASE("largest twists below the bound, per stratum") {
  Quiver q = kronecker_quiver(3);
  DimVec d = {3, 4};
  TStarReport rep = t_star(q, d);
  CHECK(rep.fano_index == 3);
  CHECK(rep.per_type.size() == 18);

  std::map<std::vector<DimVec>, long long> values;
  for (const auto& [type, t] : rep.per_type) values[type.parts] = t;
  // Row check from the bound: 21 + (2/3) * 63 = 63 < 84, and t = 3 fails.
  CHECK(values[{{1, 1}, {2, 3}}] == 2);
  // The stratum ((3,3),(0,1)) caps the minimum at 1: its eta equals 126
  // while the twist coefficient is 63, so t = 2 already gives
  // 21 + 126 >= 126. This is visible in the published table's own row.
  CHECK(values[{{3, 3}, {0, 1}}] == 1);
  CHECK(rep.min == 1);

  // 0 <= min <= r - 1 and the criterion itself.
  CHECK(rep.min >= 0);
  CHECK(rep.min <= rep.fano_index - 1);
  CHECK_FALSE(theorem_d_criterion(q, d));
}

TEST_CASE("t-star for the m-Kronecker family") {
  // The stratum ((2,2),(0,1)) gives t = m - 2 for every m: its eta is
  // 10m(m-1) in the c = 2 normalization while k_1 - k_2 = 5m and the twist
  // coefficient is 10m, so the strict bound caps t at m - 2.
  for (int m = 3; m <= 11; ++m) {
    Quiver q = kronecker_quiver(m);
    DimVec d = {2, 3};
    TStarReport rep = t_star(q, d);
    CHECK(rep.fano_index == m);
    CHECK(rep.min == m - 2);
    CHECK(rep.min >= 0);
    CHECK(rep.min <= rep.fano_index - 1);
    CHECK_FALSE(theorem_d_criterion(q, d));
  }
}

TEST_CASE("table 2: rescaled weights match the symbolic entries") {
  // Entries of the published m-Kronecker table, evaluated at m: the rows
  // print (1/m) W with k_s = mu(d^s), i.e. our weights divided by c * m.
  Linearisation a = {2, -1};
  for (long long m : {3LL, 4LL, 5LL}) {
    Quiver q = kronecker_quiver(m);
    DimVec d = {2, 3};
    Stability theta = canonical_stability(q, d);
    std::vector<Rat> h_over_r;
    for (long long t : theta) h_over_r.push_back(Rat(t, m));
    for (const qv_testdata::Table2Row& row : qv_testdata::table2()) {
      StratumWeights sw = stratum_weights(HnType{row.type}, theta);
      Rat scale = Rat(1) / Rat(sw.c * m);
      CAPTURE(m);
      CAPTURE(to_string(HnType{row.type}));

      std::vector<Rat> hom;
      for (const Rat& w : weights_hom_support(sw)) hom.push_back(w * scale);
      CHECK(hom == row.hom);

      std::vector<Rat> univ;
      for (const Rat& w : weights_universal_support(sw, a)) univ.push_back(w * scale);
      CHECK(univ == row.univ);

      CHECK(weight_linearised(sw, h_over_r) * scale == row.lin);
      CHECK(Rat(eta_bound(sw, q)) * scale == row.eta(m));
    }
  }
}

TEST_CASE("the four twist families for the m-Kronecker proposition") {
  // Teleman inequalities for the 5.1 families. The boundary twist
  // s = m - 1 fails on the stratum ((2,2),(0,1)) for the hom family and
  // the structure-sheaf family, and the dual-universal family fails from
  // t = m - 2 on; everything passes for s below those thresholds.
  for (int m : {3, 4, 7, 11}) {
    Quiver q = kronecker_quiver(m);
    DimVec d = {2, 3};
    Stability theta = canonical_stability(q, d);
    Linearisation a = {2, -1};
    auto strata = stratum_weights_all(q, d, theta);
    auto ok = [&](const BundleExpr& f) { return teleman_report(q, strata, f, a).all_satisfied; };

    for (int s = 1; s <= m - 2; ++s) {
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) CHECK(ok(bundle_Udual(i) * bundle_U(j) * bundle_OH(q, d, -s)));
      CHECK(ok(bundle_OH(q, d, -s)));
    }
    CHECK_FALSE(ok(bundle_Udual(1) * bundle_U(1) * bundle_OH(q, d, -(m - 1))));
    CHECK_FALSE(ok(bundle_OH(q, d, -(m - 1))));

    for (int s = 1; s <= m - 1; ++s)
      for (int i = 1; i <= 2; ++i) CHECK(ok(bundle_U(i) * bundle_OH(q, d, -s)));

    // Dual universal bundles: vertex 2 saturates the bound on the stratum
    // ((2,2),(0,1)) already at t = m - 2, vertex 1 only at t = m - 1.
    for (int t = 0; t <= m - 3; ++t)
      for (int i = 1; i <= 2; ++i) CHECK(ok(bundle_Udual(i) * bundle_OH(q, d, -t)));
    CHECK(ok(bundle_Udual(1) * bundle_OH(q, d, -(m - 2))));
    CHECK_FALSE(ok(bundle_Udual(2) * bundle_OH(q, d, -(m - 2))));
    CHECK_FALSE(ok(bundle_Udual(1) * bundle_OH(q, d, -(m - 1))));
  }
}

TEST_CASE("serre partner is an involution on weight data") {
  Quiver q = kronecker_quiver(3);
  DimVec d = {3, 4};
  auto strata = stratum_weights_all(q, d, kTheta);
  std::vector<BundleExpr> bundles = {bundle_O(), bundle_U(1), bundle_Udual(2) * bundle_U(1),
                                     bundle_U(2) * bundle_OH(q, d, -1)};
  for (const BundleExpr& f : bundles) {
    BundleExpr twice = serre_partner(serre_partner(f, q, d), q, d);
    for (const StratumWeights& sw : strata)
      CHECK(weights_expression(sw, f, kLin) == weights_expression(sw, twice, kLin));
  }
}

TEST_CASE("eta of the trivial type is the empty sum") {
  Quiver q = kronecker_quiver(3);
  StratumWeights sw = stratum_weights(HnType{{{3, 4}}}, kTheta);
  CHECK(eta_bound(sw, q) == 0);
}
