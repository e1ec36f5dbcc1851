#pragma once

// Symmetric-function machinery: elementary symmetric polynomials, Schur
// polynomials via dual Jacobi-Trudi, and the antisymmetrization map that
// turns Weyl-antiinvariant root polynomials into polynomials in the
// elementary symmetric (Chern class) generators.

#include <functional>
#include <map>
#include <vector>

#include "qv/poly.hpp"

namespace qv {

using Partition = std::vector<int>;  // weakly decreasing positive parts

Partition conjugate_partition(const Partition& lambda);
long long partition_weight(const Partition& lambda);

// Partitions fitting in a rows x cols box, including the empty one.
std::vector<Partition> partitions_in_box(int rows, int cols);

// Elementary symmetric e_k in the given root variables.
ZPoly elementary_symmetric(int nvars, const std::vector<int>& vars, int k);

// Schur polynomial s_lambda in the given root variables (dual Jacobi-Trudi).
ZPoly schur_in_roots(int nvars, const std::vector<int>& vars, const Partition& lambda);

// Determinant of the dual Jacobi-Trudi matrix with entry (i,j) given by the
// callback e(lambda'_i - i + j); e(0) = 1, e(k) = 0 outside 0..max_index.
template <typename PolyT>
PolyT jacobi_trudi_det(const Partition& lambda, int nvars, int max_index,
                       const std::function<PolyT(int)>& e) {
  if (lambda.empty()) return PolyT::constant(nvars, 1);
  Partition conj = conjugate_partition(lambda);
  int m = lambda[0];
  // Column DP over subsets of used rows; parity tracked per insertion.
  std::vector<std::map<unsigned, PolyT>> dp(m + 1);
  dp[0][0u] = PolyT::constant(nvars, 1);
  for (int col = 0; col < m; ++col) {
    for (const auto& [mask, val] : dp[col]) {
      if (val.is_zero()) continue;
      for (int row = 0; row < m; ++row) {
        if (mask & (1u << row)) continue;
        int idx = conj[row] - (row + 1) + (col + 1);
        if (idx < 0 || idx > max_index) continue;
        int inversions = 0;
        for (int r = row + 1; r < m; ++r)
          if (mask & (1u << r)) ++inversions;
        PolyT term = e(idx).scaled(inversions % 2 ? -1 : 1);
        PolyT prod = val.multiplied(term);
        unsigned key = mask | (1u << row);
        auto it = dp[col + 1].find(key);
        if (it == dp[col + 1].end())
          dp[col + 1].emplace(key, std::move(prod));
        else
          it->second += prod;
      }
    }
  }
  unsigned full = (m >= 32) ? ~0u : ((1u << m) - 1u);
  auto it = dp[m].find(full);
  return it == dp[m].end() ? PolyT(nvars) : it->second;
}

// Schur polynomial expressed in the Chern-class variables of one vertex
// group: s_lambda(x_{g,*}) as a polynomial in xi_{g,1..d_g}. Results are
// memoized per (group, lambda).
class SchurToChern {
 public:
  explicit SchurToChern(const VarLayout& xi_layout) : layout_(xi_layout) {}
  const ZPoly& get(int group, const Partition& lambda);

 private:
  const VarLayout& layout_;
  std::map<std::pair<int, Partition>, ZPoly> memo_;
};

// Antisymmetrize a root polynomial over the product of symmetric groups and
// divide by the Vandermonde factors, i.e. apply the bialternant map
// monomial-by-monomial; the result lives in the Chern-class variables.
ZPoly antisymmetrize_to_chern(const ZPoly& root_poly, const VarLayout& roots,
                              const VarLayout& xi_layout, SchurToChern& schur);

}  // namespace qv
