#pragma once

// Existence of semistable representations and enumeration of
// Harder-Narasimhan types.

#include <map>
#include <set>
#include <vector>

#include "qv/quiver.hpp"

namespace qv {

struct HnType {
  std::vector<DimVec> parts;  // slopes strictly decreasing, parts sum to d

  bool trivial() const { return parts.size() == 1; }
  friend bool operator==(const HnType& a, const HnType& b) { return a.parts == b.parts; }
  friend bool operator<(const HnType& a, const HnType& b) { return a.parts < b.parts; }
};

std::string to_string(const HnType& t);

// Memo shared across the recursive computations on one quiver.
class HnCache {
 public:
  explicit HnCache(const Quiver& q) : q_(q) {}

  const Quiver& quiver() const { return q_; }

  // Schofield's recursion: e' <= e is generic iff <f, e - e'> >= 0 for every
  // f generic in e'; 0 and e are always generic in e.
  const std::set<DimVec>& generic_subdimension_vectors(const DimVec& e);

  bool has_semistable(const DimVec& e, const Stability& theta);

 private:
  const Quiver& q_;
  std::map<DimVec, std::set<DimVec>> generic_;
  std::map<std::pair<Stability, DimVec>, bool> semistable_;
};

std::set<DimVec> generic_subdimension_vectors(const Quiver& q, const DimVec& e);

// True iff every generic proper nonzero subdimension vector e' of e has
// slope(e') <= slope(e). The slope of e itself need not vanish.
bool has_semistable(const Quiver& q, const DimVec& e, const Stability& theta);

// All HN types for (q, d, theta), sorted lexicographically on the
// concatenated parts. Includes the trivial type (d) iff d itself admits a
// semistable representation.
std::vector<HnType> hn_types(const Quiver& q, const DimVec& d, const Stability& theta);

// Nontrivial types only, in the same order.
std::vector<HnType> unstable_hn_types(const Quiver& q, const DimVec& d, const Stability& theta);

}  // namespace qv
