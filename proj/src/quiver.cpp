#include "qv/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace qv {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ <= 0) throw std::invalid_argument("quiver needs at least one vertex");
  for (const Arrow& a : arrows_) {
    if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_)
      throw std::invalid_argument("arrow endpoint out of range 1.." + std::to_string(n_));
  }
}

std::optional<std::vector<int>> Quiver::topological_order() const {
  std::vector<int> indeg(n_ + 1, 0);
  for (const Arrow& a : arrows_) indeg[a.target]++;
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 1; v <= n_; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(n_);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const Arrow& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) ready.push(a.target);
  }
  if (static_cast<int>(order.size()) != n_) return std::nullopt;
  return order;
}

int Quiver::arrow_multiplicity(int i, int j) const {
  int m = 0;
  for (const Arrow& a : arrows_)
    if (a.source == i && a.target == j) ++m;
  return m;
}

Quiver kronecker_quiver(int arrow_count) {
  std::vector<Arrow> arrows(arrow_count, Arrow{1, 2});
  return Quiver(2, std::move(arrows));
}

Quiver quiver_from_multiplicities(const std::vector<std::vector<int>>& mult) {
  int n = static_cast<int>(mult.size());
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < mult[i][j]; ++k) arrows.push_back(Arrow{i + 1, j + 1});
  return Quiver(n, std::move(arrows));
}

void validate_dimension_vector(const Quiver& q, const DimVec& d) {
  if (static_cast<int>(d.size()) != q.vertex_count())
    throw std::invalid_argument("dimension vector length does not match vertex count");
  bool nonzero = false;
  for (int x : d) {
    if (x < 0) throw std::invalid_argument("dimension vector entry is negative");
    if (x > 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("dimension vector is zero");
}

void validate_stability(const Quiver& q, const DimVec& d, const Stability& theta) {
  if (static_cast<int>(theta.size()) != q.vertex_count())
    throw std::invalid_argument("stability parameter length does not match vertex count");
  bool nonzero = false;
  for (long long t : theta) nonzero = nonzero || t != 0;
  if (!nonzero) throw std::invalid_argument("stability parameter is zero");
  if (dot(theta, d) != 0)
    throw std::invalid_argument("stability parameter does not pair to zero with d");
}

long long euler_form(const Quiver& q, const DimVec& e, const DimVec& f) {
  if (static_cast<int>(e.size()) != q.vertex_count() ||
      static_cast<int>(f.size()) != q.vertex_count())
    throw std::invalid_argument("euler_form: vector length mismatch");
  long long v = 0;
  for (int i = 0; i < q.vertex_count(); ++i)
    v += static_cast<long long>(e[i]) * f[i];
  for (const Arrow& a : q.arrows())
    v -= static_cast<long long>(e[a.source - 1]) * f[a.target - 1];
  return v;
}

Stability canonical_stability(const Quiver& q, const DimVec& d) {
  validate_dimension_vector(q, d);
  Stability theta(q.vertex_count());
  for (int i = 0; i < q.vertex_count(); ++i) {
    DimVec unit(q.vertex_count(), 0);
    unit[i] = 1;
    theta[i] = euler_form(q, d, unit) - euler_form(q, unit, d);
  }
  return theta;
}

long long dot(const Stability& theta, const DimVec& e) {
  long long v = 0;
  for (size_t i = 0; i < theta.size(); ++i) v += theta[i] * e[i];
  return v;
}

Rat slope(const Stability& theta, const DimVec& e) {
  long long total = std::accumulate(e.begin(), e.end(), 0LL);
  if (total <= 0) throw std::invalid_argument("slope of a vector with nonpositive total dimension");
  return Rat(dot(theta, e), total);
}

std::vector<DimVec> subdimension_box(const DimVec& d) {
  std::vector<DimVec> out;
  DimVec cur(d.size(), 0);
  while (true) {
    out.push_back(cur);
    size_t i = 0;
    while (i < d.size() && cur[i] == d[i]) cur[i++] = 0;
    if (i == d.size()) break;
    cur[i]++;
  }
  return out;
}

namespace {

bool proper_nonzero(const DimVec& e, const DimVec& d) {
  bool zero = true, full = true;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) zero = false;
    if (e[i] != d[i]) full = false;
  }
  return !zero && !full;
}

}  // namespace

bool is_coprime(const DimVec& d, const Stability& theta) {
  if (dot(theta, d) != 0) throw std::invalid_argument("is_coprime: theta . d != 0");
  for (const DimVec& e : subdimension_box(d))
    if (proper_nonzero(e, d) && dot(theta, e) == 0) return false;
  return true;
}

bool is_strongly_amply_stable(const Quiver& q, const DimVec& d, const Stability& theta) {
  for (const DimVec& e : subdimension_box(d)) {
    if (dot(theta, e) <= 0) continue;
    DimVec rest(d.size());
    for (size_t i = 0; i < d.size(); ++i) rest[i] = d[i] - e[i];
    if (euler_form(q, e, rest) > -2) return false;
  }
  return true;
}

AssumptionReport check_assumptions(const Quiver& q, const DimVec& d, const Stability& theta) {
  validate_dimension_vector(q, d);
  validate_stability(q, d, theta);
  AssumptionReport rep;

  auto topo = q.topological_order();
  rep.acyclic = topo.has_value();
  if (!rep.acyclic) {
    // DFS until a back edge closes a cycle; report the cycle vertices.
    const int n = q.vertex_count();
    std::vector<int> state(n + 1, 0);  // 0 new, 1 on stack, 2 done
    std::vector<int> stack_pos(n + 1, -1);
    std::vector<int> path;
    std::vector<int> cycle;
    std::function<bool(int)> dfs = [&](int v) {
      state[v] = 1;
      stack_pos[v] = static_cast<int>(path.size());
      path.push_back(v);
      for (const Arrow& a : q.arrows()) {
        if (a.source != v) continue;
        if (state[a.target] == 1) {
          cycle.assign(path.begin() + stack_pos[a.target], path.end());
          return true;
        }
        if (state[a.target] == 0 && dfs(a.target)) return true;
      }
      path.pop_back();
      state[v] = 2;
      return false;
    };
    for (int v = 1; v <= n && cycle.empty(); ++v)
      if (state[v] == 0) dfs(v);
    rep.cycle_witnesses.push_back(cycle);
  }

  rep.coprime = true;
  rep.strongly_amply_stable = true;
  for (const DimVec& e : subdimension_box(d)) {
    if (proper_nonzero(e, d) && dot(theta, e) == 0) {
      rep.coprime = false;
      rep.coprimality_witnesses.push_back(e);
    }
    if (dot(theta, e) > 0) {
      DimVec rest(d.size());
      for (size_t i = 0; i < d.size(); ++i) rest[i] = d[i] - e[i];
      if (euler_form(q, e, rest) > -2) {
        rep.strongly_amply_stable = false;
        rep.ample_stability_witnesses.push_back(e);
      }
    }
  }
  return rep;
}

long long fano_index(const Quiver& q, const DimVec& d) {
  Stability theta = canonical_stability(q, d);
  long long g = 0;
  for (long long t : theta) g = std::gcd(g, t < 0 ? -t : t);
  if (g == 0) throw std::domain_error("fano_index: canonical stability vanishes");
  return g;
}

int moduli_dimension(const Quiver& q, const DimVec& d) {
  long long dim = 1 - euler_form(q, d, d);
  if (dim < 0) throw std::domain_error("moduli_dimension: 1 - <d,d> is negative");
  return static_cast<int>(dim);
}

namespace {

// Candidate values for one linearisation entry, ordered by |v| then sign.
long long nth_candidate(int k) {  // 0, 1, -1, 2, -2, ...
  if (k == 0) return 0;
  int half = (k + 1) / 2;
  return (k % 2 == 1) ? half : -half;
}

bool solve_lin_rec(const DimVec& d, size_t pos, long long target, Linearisation& a) {
  if (pos == d.size()) return target == 0;
  long long g = 0;
  for (size_t i = pos + 1; i < d.size(); ++i) g = std::gcd(g, static_cast<long long>(d[i]));
  long long bound = std::max({std::llabs(target), g, 1LL}) + 1;
  for (int k = 0;; ++k) {
    long long v = nth_candidate(k);
    if (std::llabs(v) > bound) return false;
    long long rest = target - v * d[pos];
    if (g == 0 ? rest == 0 : rest % g == 0) {
      a[pos] = v;
      if (solve_lin_rec(d, pos + 1, rest, a)) return true;
    }
  }
}

}  // namespace

std::optional<Linearisation> solve_linearisation(const DimVec& d) {
  long long g = 0;
  for (int x : d) g = std::gcd(g, static_cast<long long>(x));
  if (g != 1) return std::nullopt;
  Linearisation a(d.size(), 0);
  if (!solve_lin_rec(d, 0, 1, a)) return std::nullopt;
  return a;
}

std::string to_string(const DimVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace qv
