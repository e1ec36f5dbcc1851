#pragma once

// Test-only oracles, independent of the implementation paths they check:
//  - random-representation hom-dimension over F_p, deciding genericity of
//    subdimension vectors by the ext-vanishing characterization;
//  - exhaustive enumeration of HN types over all ordered compositions.

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "qv/hn.hpp"
#include "qv/quiver.hpp"

namespace qv_oracle {

constexpr long long kPrime = 1009;

inline long long mod_inv(long long a, long long p) {
  long long r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline int nullity_mod_p(std::vector<std::vector<long long>> m, int ncols) {
  int rank = 0;
  size_t row = 0;
  for (int col = 0; col < ncols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] % kPrime == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    long long inv = mod_inv((m[row][col] % kPrime + kPrime) % kPrime, kPrime);
    for (int c = col; c < ncols; ++c)
      m[row][c] = (m[row][c] % kPrime + kPrime) % kPrime * inv % kPrime;
    for (size_t r2 = 0; r2 < m.size(); ++r2) {
      if (r2 == row) continue;
      long long f = (m[r2][col] % kPrime + kPrime) % kPrime;
      if (!f) continue;
      for (int c = col; c < ncols; ++c)
        m[r2][c] = ((m[r2][c] - f * m[row][c]) % kPrime + kPrime) % kPrime;
    }
    ++row;
    ++rank;
  }
  return ncols - rank;
}

// dim Hom(X, Z) for random representations of dimensions (sub, quot):
// nullity of phi |-> Z_a phi_{s(a)} - phi_{t(a)} X_a.
inline int hom_dimension_random_pair(const qv::Quiver& q, const qv::DimVec& sub,
                                     const qv::DimVec& quot, std::mt19937& rng) {
  const int n = q.vertex_count();
  std::uniform_int_distribution<long long> entry(0, kPrime - 1);
  std::vector<std::vector<std::vector<long long>>> X, Z;
  for (const qv::Arrow& a : q.arrows()) {
    int s = a.source - 1, t = a.target - 1;
    std::vector<std::vector<long long>> x(sub[t], std::vector<long long>(sub[s]));
    for (auto& r : x)
      for (auto& v : r) v = entry(rng);
    std::vector<std::vector<long long>> z(quot[t], std::vector<long long>(quot[s]));
    for (auto& r : z)
      for (auto& v : r) v = entry(rng);
    X.push_back(std::move(x));
    Z.push_back(std::move(z));
  }
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + quot[i] * sub[i];
  int ncols = offset[n];
  if (ncols == 0) return 0;
  std::vector<std::vector<long long>> rows;
  for (size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const qv::Arrow& a = q.arrows()[ai];
    int s = a.source - 1, t = a.target - 1;
    for (int r = 0; r < quot[t]; ++r)
      for (int c = 0; c < sub[s]; ++c) {
        std::vector<long long> row(ncols, 0);
        for (int k = 0; k < quot[s]; ++k)
          row[offset[s] + k * sub[s] + c] = (row[offset[s] + k * sub[s] + c] + Z[ai][r][k]) % kPrime;
        for (int k = 0; k < sub[t]; ++k)
          row[offset[t] + r * sub[t] + k] =
              ((row[offset[t] + r * sub[t] + k] - X[ai][k][c]) % kPrime + kPrime) % kPrime;
        rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) return ncols;
  return nullity_mod_p(std::move(rows), ncols);
}

// Genericity oracle: hom >= <sub, quot> always, with equality at some
// sample certifying generic ext-vanishing by semicontinuity.
inline bool is_generic(const qv::Quiver& q, const qv::DimVec& e, const qv::DimVec& sub,
                       std::mt19937& rng, int samples = 20) {
  qv::DimVec quot(e.size());
  for (size_t i = 0; i < e.size(); ++i) quot[i] = e[i] - sub[i];
  long long target = qv::euler_form(q, sub, quot);
  for (int s = 0; s < samples; ++s)
    if (hom_dimension_random_pair(q, sub, quot, rng) == target) return true;
  return false;
}

// All valid HN types by exhaustive search over ordered compositions.
inline std::set<std::vector<qv::DimVec>> exhaustive_hn_types(const qv::Quiver& q,
                                                             const qv::DimVec& d,
                                                             const qv::Stability& theta) {
  std::set<std::vector<qv::DimVec>> out;
  std::vector<qv::DimVec> prefix;
  const qv::DimVec zero(d.size(), 0);
  std::function<void(qv::DimVec)> rec = [&](qv::DimVec remaining) {
    if (remaining == zero) {
      bool ok = !prefix.empty();
      for (size_t m = 0; ok && m + 1 < prefix.size(); ++m)
        ok = qv::slope(theta, prefix[m]) > qv::slope(theta, prefix[m + 1]);
      for (size_t m = 0; ok && m < prefix.size(); ++m)
        ok = qv::has_semistable(q, prefix[m], theta);
      if (ok) out.insert(prefix);
      return;
    }
    for (const qv::DimVec& part : qv::subdimension_box(remaining)) {
      if (part == zero) continue;
      qv::DimVec rest(remaining.size());
      for (size_t i = 0; i < rest.size(); ++i) rest[i] = remaining[i] - part[i];
      prefix.push_back(part);
      rec(rest);
      prefix.pop_back();
    }
  };
  rec(d);
  return out;
}

}  // namespace qv_oracle
