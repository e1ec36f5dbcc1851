#pragma once

// Tautological relations of the Chow presentation: for every forbidden
// subdimension vector e (0 < e <= d with theta . e > 0), antisymmetrized
// products of the forbidden polynomial delta_e with a Schur basis of the
// split-symmetric ring. Split-symmetric polynomials form a free module
// over the fully symmetric ring with basis the box Schur polynomials, so
// these finitely many generators span the full relation ideal together
// with monomial multiples.

#include <vector>

#include "qv/poly.hpp"
#include "qv/quiver.hpp"

namespace qv {

std::vector<DimVec> forbidden_subdimension_vectors(const Quiver& q, const DimVec& d,
                                                   const Stability& theta);

// delta_e = prod_{a in Q_1} prod_{r <= e_s(a)} prod_{s > e_t(a)}
//             (x_{t(a),s} - x_{s(a),r})
ZPoly forbidden_polynomial(const Quiver& q, const DimVec& d, const DimVec& e,
                           const VarLayout& roots);

// Homogeneous relation generators in the Chern-class variables, degrees
// 1..maxdeg, zero generators dropped. `parallel` switches the OpenMP path;
// the output is sorted and identical for both.
std::vector<ZPoly> tautological_relations(const Quiver& q, const DimVec& d,
                                          const Stability& theta, int maxdeg, bool parallel);

}  // namespace qv
