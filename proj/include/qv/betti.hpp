#pragma once

// Diagonal Hodge numbers via the Harder-Narasimhan recursion over exact
// counting series, plus the Hochschild-homology count derived from them.

#include <vector>

#include "qv/quiver.hpp"

namespace qv {

struct PoincarePolynomial {
  std::vector<long long> b;  // b[k] = h^{k,k}, degree = moduli dimension

  int degree() const { return static_cast<int>(b.size()) - 1; }
  long long sum() const;
};

PoincarePolynomial poincare_polynomial(const Quiver& q, const DimVec& d, const Stability& theta);

// Total dimension of Hochschild homology in degree zero: the expected
// length of a full exceptional collection.
long long hochschild_zero(const Quiver& q, const DimVec& d, const Stability& theta);

// h^{1,1}.
long long picard_rank(const Quiver& q, const DimVec& d, const Stability& theta);

// Whether the semistable counting series of e is nonzero. Cross-validates
// the Schofield-recursion route to has_semistable: the two must agree.
bool counting_series_nonzero(const Quiver& q, const DimVec& e, const Stability& theta);

}  // namespace qv
