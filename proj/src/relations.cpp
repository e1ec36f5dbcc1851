#include "qv/relations.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qv/symfunc.hpp"

namespace qv {

std::vector<DimVec> forbidden_subdimension_vectors(const Quiver& q, const DimVec& d,
                                                   const Stability& theta) {
  std::vector<DimVec> out;
  for (const DimVec& e : subdimension_box(d))
    if (dot(theta, e) > 0) out.push_back(e);
  return out;
}

ZPoly forbidden_polynomial(const Quiver& q, const DimVec& d, const DimVec& e,
                           const VarLayout& roots) {
  ZPoly p = ZPoly::constant(roots.total, 1);
  for (const Arrow& a : q.arrows()) {
    int src = a.source - 1, tgt = a.target - 1;
    for (int r = 0; r < e[src]; ++r)
      for (int s = e[tgt]; s < d[tgt]; ++s) {
        ZPoly factor = ZPoly::variable(roots.total, roots.var(tgt, s));
        factor += ZPoly::variable(roots.total, roots.var(src, r)).scaled(-1);
        p = p.multiplied(factor);
      }
  }
  return p;
}

namespace {

struct Generator {
  DimVec e;
  std::vector<Partition> box;  // one partition per vertex group
};

}  // namespace

std::vector<ZPoly> tautological_relations(const Quiver& q, const DimVec& d,
                                          const Stability& theta, int maxdeg, bool parallel) {
  const int n = q.vertex_count();
  VarLayout roots = VarLayout::roots(d);
  VarLayout xi = VarLayout::chern_classes(d);

  // Pushing forward from a forbidden stratum divides by the cross
  // Vandermonde factors only; implemented through the full antisymmetrizer,
  // the input picks up the intra-block Vandermonde of each split group.
  std::vector<Generator> gens;
  for (const DimVec& e : forbidden_subdimension_vectors(q, d, theta)) {
    long long delta_deg = 0;
    for (const Arrow& a : q.arrows())
      delta_deg += static_cast<long long>(e[a.source - 1]) * (d[a.target - 1] - e[a.target - 1]);
    long long cross_deg = 0;
    for (int i = 0; i < n; ++i)
      cross_deg += static_cast<long long>(e[i]) * (d[i] - e[i]);
    long long base = delta_deg - cross_deg;
    if (base > maxdeg) continue;

    std::vector<std::vector<Partition>> boxes(n);
    for (int i = 0; i < n; ++i) boxes[i] = partitions_in_box(e[i], d[i] - e[i]);

    std::vector<Partition> cur(n);
    std::function<void(int, long long)> rec = [&](int g, long long deg) {
      if (deg > maxdeg) return;
      if (g == n) {
        gens.push_back(Generator{e, cur});
        return;
      }
      for (const Partition& lam : boxes[g]) {
        cur[g] = lam;
        rec(g + 1, deg + partition_weight(lam));
      }
    };
    rec(0, base);
  }

  std::vector<ZPoly> out(gens.size(), ZPoly(xi.total));
  SchurToChern shared_schur(xi);

  // Intra-block Vandermonde of one split group.
  auto block_vandermonde = [&](int group, int lo, int hi) {
    ZPoly v = ZPoly::constant(roots.total, 1);
    for (int r = lo; r < hi; ++r)
      for (int s = r + 1; s < hi; ++s) {
        ZPoly factor = ZPoly::variable(roots.total, roots.var(group, r));
        factor += ZPoly::variable(roots.total, roots.var(group, s)).scaled(-1);
        v = v.multiplied(factor);
      }
    return v;
  };

  auto compute = [&](const Generator& gen, SchurToChern& schur) {
    ZPoly g = forbidden_polynomial(q, d, gen.e, roots);
    for (int i = 0; i < n; ++i) {
      g = g.multiplied(block_vandermonde(i, 0, gen.e[i]));
      g = g.multiplied(block_vandermonde(i, gen.e[i], d[i]));
      if (gen.box[i].empty()) continue;
      std::vector<int> split_vars;
      for (int r = 0; r < gen.e[i]; ++r) split_vars.push_back(roots.var(i, r));
      g = g.multiplied(schur_in_roots(roots.total, split_vars, gen.box[i]));
    }
    return antisymmetrize_to_chern(g, roots, xi, schur);
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      SchurToChern local_schur(xi);  // per-thread memo
#pragma omp for schedule(dynamic)
      for (long long i = 0; i < static_cast<long long>(gens.size()); ++i)
        out[i] = compute(gens[i], local_schur);
    }
#else
    for (size_t i = 0; i < gens.size(); ++i) out[i] = compute(gens[i], shared_schur);
#endif
  } else {
    for (size_t i = 0; i < gens.size(); ++i) out[i] = compute(gens[i], shared_schur);
  }

  std::vector<ZPoly> nonzero;
  for (ZPoly& p : out) {
    if (p.is_zero()) continue;
    long long deg = p.homogeneous_degree(xi);
    if (deg == 0)
      throw std::logic_error("tautological relation of degree zero: inconsistent presentation");
    if (deg >= 1 && deg <= maxdeg) nonzero.push_back(std::move(p));
  }
  std::sort(nonzero.begin(), nonzero.end(),
            [&](const ZPoly& a, const ZPoly& b) { return a.terms() < b.terms(); });
  return nonzero;
}

}  // namespace qv
