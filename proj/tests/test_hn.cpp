#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qv/hn.hpp"

using namespace qv;

TEST_CASE("generic subdimension vectors: worked examples") {
  Quiver a2(2, {{1, 2}});
  std::set<DimVec> expected = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 1}};
  CHECK(generic_subdimension_vectors(a2, {2, 1}) == expected);

  Quiver k3 = kronecker_quiver(3);
  std::set<DimVec> expected3 = {{0, 0}, {0, 1}, {1, 1}};
  CHECK(generic_subdimension_vectors(k3, {1, 1}) == expected3);

  auto gen = generic_subdimension_vectors(k3, {2, 3});
  CHECK(gen.count({0, 0}) == 1);
  CHECK(gen.count({2, 3}) == 1);
}

TEST_CASE("generic subdimension vectors agree with the random-representation oracle") {
  // Quivers with <= 3 vertices, <= 3 arrows (acyclic), entries <= 2.
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> nv(1, 3);
  std::uniform_int_distribution<int> na(0, 3);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = nv(rng);
    int arrows = na(rng);
    std::vector<Arrow> arr;
    std::uniform_int_distribution<int> v(1, n);
    for (int i = 0; i < arrows && n > 1; ++i) {
      int s = v(rng), t = v(rng);
      if (s == t) continue;
      if (s > t) std::swap(s, t);  // keep acyclic
      arr.push_back({s, t});
    }
    Quiver q(n, arr);
    std::uniform_int_distribution<int> entry(0, 2);
    DimVec e(n);
    bool nonzero = false;
    for (int& x : e) {
      x = entry(rng);
      nonzero = nonzero || x > 0;
    }
    if (!nonzero) e[0] = 1;

    auto gen = generic_subdimension_vectors(q, e);
    for (const DimVec& sub : subdimension_box(e)) {
      bool expected = gen.count(sub) == 1;
      bool oracle = qv_oracle::is_generic(q, e, sub, rng);
      CAPTURE(to_string(e));
      CAPTURE(to_string(sub));
      CHECK(expected == oracle);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("existence of semistable representations") {
  Quiver k3 = kronecker_quiver(3);
  CHECK(has_semistable(k3, {2, 3}, {12, -9}));
  Quiver a2(2, {{1, 2}});
  CHECK_FALSE(has_semistable(a2, {2, 1}, {1, -1}));
  CHECK(has_semistable(a2, {1, 0}, {1, -1}));
  CHECK(has_semistable(k3, {0, 1}, {12, -9}));
}

TEST_CASE("has_semistable is invariant under scaling theta") {
  Quiver k3 = kronecker_quiver(3);
  for (const DimVec& e : subdimension_box({3, 4})) {
    if (e == DimVec{0, 0}) continue;
    for (long long c : {2LL, 5LL}) {
      Stability scaled = {12 * c, -9 * c};
      CHECK(has_semistable(k3, e, {12, -9}) == has_semistable(k3, e, scaled));
    }
  }
}

TEST_CASE("HN types of the 12-dimensional example") {
  Quiver k3 = kronecker_quiver(3);
  auto types = hn_types(k3, {3, 4}, {12, -9});
  CHECK(types.size() == 19);
  auto nontrivial = unstable_hn_types(k3, {3, 4}, {12, -9});
  CHECK(nontrivial.size() == 18);

  std::set<std::vector<DimVec>> expected = {
      {{1, 1}, {2, 3}},         {{2, 2}, {1, 2}},         {{3, 3}, {0, 1}},
      {{3, 2}, {0, 2}},         {{2, 1}, {1, 3}},         {{2, 1}, {1, 2}, {0, 1}},
      {{2, 1}, {1, 1}, {0, 2}}, {{3, 1}, {0, 3}},         {{1, 0}, {2, 4}},
      {{1, 0}, {2, 3}, {0, 1}}, {{1, 0}, {1, 1}, {1, 3}}, {{1, 0}, {1, 1}, {1, 2}, {0, 1}},
      {{1, 0}, {2, 2}, {0, 2}}, {{1, 0}, {2, 1}, {0, 3}}, {{2, 0}, {1, 3}, {0, 1}},
      {{2, 0}, {1, 2}, {0, 2}}, {{2, 0}, {1, 1}, {0, 3}}, {{3, 0}, {0, 4}}};
  std::set<std::vector<DimVec>> actual;
  for (const HnType& t : nontrivial) actual.insert(t.parts);
  CHECK(actual == expected);
}

TEST_CASE("m-Kronecker types for d = (2,3) are independent of m") {
  std::set<std::vector<DimVec>> expected = {
      {{1, 1}, {1, 2}},         {{2, 2}, {0, 1}},         {{2, 1}, {0, 2}}, {{1, 0}, {1, 3}},
      {{1, 0}, {1, 2}, {0, 1}}, {{1, 0}, {1, 1}, {0, 2}}, {{2, 0}, {0, 3}}};
  for (int m = 3; m <= 5; ++m) {
    Quiver q = kronecker_quiver(m);
    DimVec d = {2, 3};
    auto nontrivial = unstable_hn_types(q, d, canonical_stability(q, d));
    CHECK(nontrivial.size() == 7);
    std::set<std::vector<DimVec>> actual;
    for (const HnType& t : nontrivial) actual.insert(t.parts);
    CHECK(actual == expected);
  }
}

TEST_CASE("unit dimension vector has only the trivial type") {
  Quiver k3 = kronecker_quiver(3);
  auto types = hn_types(k3, {1, 0}, {0, 5});
  REQUIRE(types.size() == 1);
  CHECK(types[0].trivial());
}

TEST_CASE("HN type invariants and exhaustive-oracle closure") {
  // Small instances: compare against a brute-force enumeration of ordered
  // compositions filtered by the defining predicate.
  struct Case {
    Quiver q;
    DimVec d;
    Stability theta;
  };
  std::vector<Case> cases;
  {
    Quiver k2 = kronecker_quiver(2);
    cases.push_back({k2, {1, 1}, canonical_stability(k2, {1, 1})});
    Quiver k3 = kronecker_quiver(3);
    cases.push_back({k3, {2, 3}, canonical_stability(k3, {2, 3})});
    cases.push_back({k3, {1, 2}, canonical_stability(k3, {1, 2})});
    Quiver a2(2, {{1, 2}});
    cases.push_back({a2, {2, 2}, {1, -1}});
    Quiver q3(3, {{1, 2}, {1, 3}, {2, 3}, {2, 3}, {2, 3}});
    cases.push_back({q3, {1, 1, 1}, canonical_stability(q3, {1, 1, 1})});
  }
  for (const Case& c : cases) {
    auto types = hn_types(c.q, c.d, c.theta);

    for (const HnType& t : types) {
      DimVec sum(c.d.size(), 0);
      for (const DimVec& part : t.parts)
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += part[i];
      CHECK(sum == c.d);
      for (size_t m = 0; m + 1 < t.parts.size(); ++m)
        CHECK(slope(c.theta, t.parts[m]) > slope(c.theta, t.parts[m + 1]));
      for (const DimVec& part : t.parts) CHECK(has_semistable(c.q, part, c.theta));
    }

    std::set<std::vector<DimVec>> expected;
    std::vector<DimVec> prefix;
    const DimVec zero(c.d.size(), 0);
    std::function<void(DimVec)> rec = [&](DimVec remaining) {
      if (remaining == zero) {
        bool ok = !prefix.empty();
        for (size_t m = 0; ok && m + 1 < prefix.size(); ++m)
          ok = slope(c.theta, prefix[m]) > slope(c.theta, prefix[m + 1]);
        for (size_t m = 0; ok && m < prefix.size(); ++m)
          ok = has_semistable(c.q, prefix[m], c.theta);
        if (ok) expected.insert(prefix);
        return;
      }
      for (const DimVec& part : subdimension_box(remaining)) {
        if (part == zero) continue;
        DimVec rest(remaining.size());
        for (size_t i = 0; i < rest.size(); ++i) rest[i] = remaining[i] - part[i];
        prefix.push_back(part);
        rec(rest);
        prefix.pop_back();
      }
    };
    rec(c.d);

    std::set<std::vector<DimVec>> actual;
    for (const HnType& t : types) actual.insert(t.parts);
    CHECK(actual == expected);
  }
}
