#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qv/chow.hpp"
#include "qv/relations.hpp"
#include "qv/rref.hpp"

using namespace qv;

// The OpenMP kernels must agree with their serial reference
// implementations entry by entry: row reduction produces the canonical
// reduced echelon form of the row space either way, and relation
// generation is order-normalized.

namespace {

SparseRow random_row(std::mt19937& rng, int ncols, int nnz_max) {
  std::uniform_int_distribution<int> col(0, ncols - 1);
  std::uniform_int_distribution<int> val(-6, 6);
  std::uniform_int_distribution<int> nnz(0, nnz_max);
  std::map<int, long long> entries;
  int k = nnz(rng);
  for (int i = 0; i < k; ++i) entries[col(rng)] += val(rng);
  SparseRow row;
  for (const auto& [c, v] : entries)
    if (v != 0) row.emplace_back(c, Rat(v));
  return row;
}

bool rows_equal(const Rref& a, const Rref& b) {
  if (a.rank() != b.rank()) return false;
  if (a.pivot_columns() != b.pivot_columns()) return false;
  for (int col : a.pivot_columns()) {
    const SparseRow& ra = a.row_for(col);
    const SparseRow& rb = b.row_for(col);
    if (ra.size() != rb.size()) return false;
    for (size_t i = 0; i < ra.size(); ++i)
      if (ra[i].first != rb[i].first || !(ra[i].second == rb[i].second)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("row reduction: parallel batches match the serial reference") {
  std::mt19937 rng(987123);
  for (int trial = 0; trial < 20; ++trial) {
    int ncols = 40 + trial;
    std::vector<SparseRow> rows;
    for (int i = 0; i < 120; ++i) rows.push_back(random_row(rng, ncols, 10));

    Rref serial(ncols), parallel(ncols);
    serial.add_rows(rows, false);
    parallel.add_rows(rows, true);
    CHECK(rows_equal(serial, parallel));

    // Batch splitting does not change the result either.
    Rref split(ncols);
    std::vector<SparseRow> first(rows.begin(), rows.begin() + 37);
    std::vector<SparseRow> rest(rows.begin() + 37, rows.end());
    split.add_rows(first, true);
    split.add_rows(rest, false);
    CHECK(rows_equal(serial, split));
  }
}

TEST_CASE("row reduction: normal forms are linear and idempotent") {
  std::mt19937 rng(5150);
  int ncols = 30;
  Rref rr(ncols);
  std::vector<SparseRow> rows;
  for (int i = 0; i < 40; ++i) rows.push_back(random_row(rng, ncols, 8));
  rr.add_rows(rows, false);

  for (int i = 0; i < 20; ++i) {
    SparseRow r = random_row(rng, ncols, 8);
    SparseRow red = rr.reduce(r);
    CHECK(rr.reduce(red) == red);
    for (const auto& [col, coeff] : red) CHECK_FALSE(rr.is_pivot(col));
    // Rows of the span reduce to zero.
    if (!rows.empty()) {
      const SparseRow& member = rows[i % rows.size()];
      CHECK(rr.reduce(member).empty());
    }
  }
}

TEST_CASE("relation generation: parallel matches serial") {
  struct Case {
    Quiver q;
    DimVec d;
  };
  std::vector<Case> cases = {{kronecker_quiver(3), {3, 4}},
                             {kronecker_quiver(3), {2, 3}},
                             {kronecker_quiver(5), {2, 3}},
                             {Quiver(3, {{1, 2}, {1, 3}, {2, 3}, {2, 3}, {2, 3}}), {1, 1, 1}}};
  for (const Case& c : cases) {
    Stability theta = canonical_stability(c.q, c.d);
    int maxdeg = moduli_dimension(c.q, c.d);
    auto serial = tautological_relations(c.q, c.d, theta, maxdeg, false);
    auto parallel = tautological_relations(c.q, c.d, theta, maxdeg, true);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
  }
}

TEST_CASE("presentation build: parallel matches serial") {
  Quiver q = kronecker_quiver(3);
  DimVec d = {3, 4};
  Stability theta = {12, -9};
  Linearisation a = {3, -2};
  ChowPresentation serial(q, d, theta, a, false);
  ChowPresentation parallel(q, d, theta, a, true);
  CHECK(serial.basis_sizes() == parallel.basis_sizes());
  for (int deg = 0; deg <= serial.dim(); ++deg) CHECK(serial.basis(deg) == parallel.basis(deg));
  CHECK(serial.degree_scalar() == parallel.degree_scalar());
  BundleExpr f = bundle_Udual(1) * bundle_U(2) * bundle_OH(q, d, -1);
  CHECK(serial.euler_characteristic(f) == parallel.euler_characteristic(f));
}
