#include "qv/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace qv {

Partition conjugate_partition(const Partition& lambda) {
  Partition conj;
  if (lambda.empty()) return conj;
  conj.resize(lambda[0], 0);
  for (int part : lambda)
    for (int j = 0; j < part; ++j) conj[j]++;
  return conj;
}

long long partition_weight(const Partition& lambda) {
  long long w = 0;
  for (int p : lambda) w += p;
  return w;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int row, int maxpart) {
    out.push_back(cur);
    if (row == rows) return;
    for (int p = maxpart; p >= 1; --p) {
      cur.push_back(p);
      rec(row + 1, p);
      cur.pop_back();
    }
  };
  rec(0, cols);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ZPoly elementary_symmetric(int nvars, const std::vector<int>& vars, int k) {
  if (k < 0 || k > static_cast<int>(vars.size())) return ZPoly(nvars);
  // e-polynomials of variable prefixes, degree-bounded at k.
  std::vector<ZPoly> e(k + 1, ZPoly(nvars));
  e[0] = ZPoly::constant(nvars, 1);
  for (size_t idx = 0; idx < vars.size(); ++idx)
    for (int j = std::min<int>(k, static_cast<int>(idx) + 1); j >= 1; --j)
      e[j] += e[j - 1].multiplied(ZPoly::variable(nvars, vars[idx]));
  return e[k];
}

ZPoly schur_in_roots(int nvars, const std::vector<int>& vars, const Partition& lambda) {
  int max_index = static_cast<int>(vars.size());
  std::function<ZPoly(int)> e = [&](int k) {
    if (k == 0) return ZPoly::constant(nvars, 1);
    return elementary_symmetric(nvars, vars, k);
  };
  return jacobi_trudi_det<ZPoly>(lambda, nvars, max_index, e);
}

const ZPoly& SchurToChern::get(int group, const Partition& lambda) {
  auto key = std::make_pair(group, lambda);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  int d = layout_.group_sizes[group];
  std::function<ZPoly(int)> e = [&](int k) {
    if (k == 0) return ZPoly::constant(layout_.total, 1);
    return ZPoly::variable(layout_.total, layout_.var(group, k - 1));
  };
  ZPoly result = jacobi_trudi_det<ZPoly>(lambda, layout_.total, d, e);
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

ZPoly antisymmetrize_to_chern(const ZPoly& root_poly, const VarLayout& roots,
                              const VarLayout& xi_layout, SchurToChern& schur) {
  const int ngroups = static_cast<int>(roots.group_sizes.size());
  std::map<std::vector<Partition>, long long> accum;

  for (const auto& [mono, coeff] : root_poly.terms()) {
    std::vector<Partition> key(ngroups);
    long long sign = 1;
    bool dead = false;
    for (int g = 0; g < ngroups && !dead; ++g) {
      int n = roots.group_sizes[g];
      std::vector<int> exps(n);
      for (int r = 0; r < n; ++r) exps[r] = mono[roots.var(g, r)];
      // Sort descending, tracking the permutation sign; repeats kill the term.
      int inversions = 0;
      for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
          if (exps[j] == exps[i]) {
            dead = true;
          } else if (exps[j] < exps[i]) {
            ++inversions;
          }
        }
      if (dead) break;
      std::sort(exps.begin(), exps.end(), std::greater<int>());
      if (inversions % 2) sign = -sign;
      Partition lambda;
      for (int r = 0; r < n; ++r) {
        int part = exps[r] - (n - 1 - r);
        if (part < 0) throw std::logic_error("staircase subtraction went negative");
        if (part > 0) lambda.push_back(part);
      }
      // Parts are weakly decreasing by construction, zeros dropped.
      key[g] = std::move(lambda);
    }
    if (dead) continue;
    accum[key] += sign * coeff;
  }

  ZPoly out(xi_layout.total);
  for (const auto& [key, coeff] : accum) {
    if (coeff == 0) continue;
    ZPoly prod = ZPoly::constant(xi_layout.total, coeff);
    for (int g = 0; g < ngroups; ++g) {
      if (key[g].empty()) continue;
      prod = prod.multiplied(schur.get(g, key[g]));
    }
    out += prod;
  }
  return out;
}

}  // namespace qv
