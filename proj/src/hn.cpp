#include "qv/hn.hpp"

#include <algorithm>
#include <numeric>

namespace qv {

std::string to_string(const HnType& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.parts.size(); ++i) {
    if (i) s += ", ";
    s += to_string(t.parts[i]);
  }
  return s + ")";
}

const std::set<DimVec>& HnCache::generic_subdimension_vectors(const DimVec& e) {
  auto it = generic_.find(e);
  if (it != generic_.end()) return it->second;

  std::set<DimVec> gen;
  const DimVec zero(e.size(), 0);
  gen.insert(zero);
  gen.insert(e);
  for (const DimVec& sub : subdimension_box(e)) {
    if (sub == zero || sub == e) continue;
    const std::set<DimVec>& gen_sub = generic_subdimension_vectors(sub);
    DimVec rest(e.size());
    for (size_t i = 0; i < e.size(); ++i) rest[i] = e[i] - sub[i];
    bool ok = true;
    for (const DimVec& f : gen_sub)
      if (euler_form(q_, f, rest) < 0) {
        ok = false;
        break;
      }
    if (ok) gen.insert(sub);
  }
  return generic_.emplace(e, std::move(gen)).first->second;
}

bool HnCache::has_semistable(const DimVec& e, const Stability& theta) {
  auto key = std::make_pair(theta, e);
  auto it = semistable_.find(key);
  if (it != semistable_.end()) return it->second;

  const DimVec zero(e.size(), 0);
  Rat mu_e = slope(theta, e);
  bool ok = true;
  for (const DimVec& sub : generic_subdimension_vectors(e)) {
    if (sub == zero || sub == e) continue;
    if (slope(theta, sub) > mu_e) {
      ok = false;
      break;
    }
  }
  semistable_.emplace(std::move(key), ok);
  return ok;
}

std::set<DimVec> generic_subdimension_vectors(const Quiver& q, const DimVec& e) {
  HnCache cache(q);
  return cache.generic_subdimension_vectors(e);
}

bool has_semistable(const Quiver& q, const DimVec& e, const Stability& theta) {
  HnCache cache(q);
  return cache.has_semistable(e, theta);
}

namespace {

void enumerate_types(HnCache& cache, const Stability& theta, const DimVec& remaining,
                     const Rat* slope_bound, std::vector<DimVec>& prefix,
                     std::vector<HnType>& out) {
  const DimVec zero(remaining.size(), 0);
  for (const DimVec& first : subdimension_box(remaining)) {
    if (first == zero) continue;
    Rat mu = slope(theta, first);
    if (slope_bound && !(mu < *slope_bound)) continue;
    if (!cache.has_semistable(first, theta)) continue;
    prefix.push_back(first);
    if (first == remaining) {
      out.push_back(HnType{prefix});
    } else {
      DimVec rest(remaining.size());
      for (size_t i = 0; i < remaining.size(); ++i) rest[i] = remaining[i] - first[i];
      enumerate_types(cache, theta, rest, &mu, prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<HnType> hn_types(const Quiver& q, const DimVec& d, const Stability& theta) {
  validate_dimension_vector(q, d);
  validate_stability(q, d, theta);
  HnCache cache(q);
  std::vector<HnType> out;
  std::vector<DimVec> prefix;
  enumerate_types(cache, theta, d, nullptr, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HnType> unstable_hn_types(const Quiver& q, const DimVec& d, const Stability& theta) {
  std::vector<HnType> all = hn_types(q, d, theta);
  std::vector<HnType> out;
  for (HnType& t : all)
    if (!t.trivial()) out.push_back(std::move(t));
  return out;
}

}  // namespace qv
