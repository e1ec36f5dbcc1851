#pragma once

// Quivers, dimension vectors, stability parameters, the Euler form and the
// standing assumptions (acyclicity, coprimality, strong ample stability).

#include <optional>
#include <string>
#include <vector>

#include "qv/arith.hpp"

namespace qv {

using DimVec = std::vector<int>;        // componentwise >= 0, not all zero
using Stability = std::vector<long long>;  // integer weights on vertices
using Linearisation = std::vector<long long>;  // a with a.d = 1

struct Arrow {
  int source = 0;  // 1-indexed
  int target = 0;
};

class Quiver {
 public:
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // Topological order of the vertices, if one exists.
  std::optional<std::vector<int>> topological_order() const;
  bool is_acyclic() const { return topological_order().has_value(); }

  // Number of arrows i -> j.
  int arrow_multiplicity(int i, int j) const;

 private:
  int n_;
  std::vector<Arrow> arrows_;
};

// Convenience constructors for the quivers used throughout.
Quiver kronecker_quiver(int arrow_count);                 // 1 => 2, m arrows
Quiver quiver_from_multiplicities(const std::vector<std::vector<int>>& mult);

// <e,f> = sum_i e_i f_i - sum_a e_{s(a)} f_{t(a)}
long long euler_form(const Quiver& q, const DimVec& e, const DimVec& f);

// theta_can: i |-> <d,1_i> - <1_i,d>; satisfies theta_can . d = 0.
Stability canonical_stability(const Quiver& q, const DimVec& d);

// mu_theta(e) = (theta . e) / sum_i e_i, exact.
Rat slope(const Stability& theta, const DimVec& e);

long long dot(const Stability& theta, const DimVec& e);

// Iterates all e with 0 <= e <= d componentwise (including both ends).
// Sizes in every instance here are tiny, so the full box is enumerated.
std::vector<DimVec> subdimension_box(const DimVec& d);

bool is_coprime(const DimVec& d, const Stability& theta);
bool is_strongly_amply_stable(const Quiver& q, const DimVec& d, const Stability& theta);

struct AssumptionReport {
  bool acyclic = false;
  bool coprime = false;
  bool strongly_amply_stable = false;
  // Violating subdimension vectors per failed check; the acyclicity witness
  // records one vertex cycle as a vector of vertex indices.
  std::vector<std::vector<int>> cycle_witnesses;
  std::vector<DimVec> coprimality_witnesses;
  std::vector<DimVec> ample_stability_witnesses;

  bool all() const { return acyclic && coprime && strongly_amply_stable; }
};

AssumptionReport check_assumptions(const Quiver& q, const DimVec& d, const Stability& theta);

// gcd of the entries of the canonical stability parameter.
long long fano_index(const Quiver& q, const DimVec& d);

// 1 - <d,d>; errors when negative.
int moduli_dimension(const Quiver& q, const DimVec& d);

// Smallest solution of a . d = 1 by lexicographic absolute value, used when
// an input file omits the linearisation.
std::optional<Linearisation> solve_linearisation(const DimVec& d);

void validate_dimension_vector(const Quiver& q, const DimVec& d);
void validate_stability(const Quiver& q, const DimVec& d, const Stability& theta);

std::string to_string(const DimVec& v);

}  // namespace qv
