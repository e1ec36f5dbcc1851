#pragma once

// Formal tensor words over { U(i), U(i)^dual, L(e) }: the common input
// language for the Teleman weight computations and the Chow ring side.

#include <optional>
#include <string>
#include <vector>

#include "qv/arith.hpp"
#include "qv/quiver.hpp"

namespace qv {

struct BundleAtom {
  enum class Kind { U, Udual, Lin };
  Kind kind = Kind::Lin;
  int vertex = 0;              // 1-indexed, for U / Udual
  std::vector<Rat> twist;      // for Lin
  std::string label;           // display only, e.g. "O(-2H)"
};

struct BundleExpr {
  std::vector<BundleAtom> atoms;  // empty product = structure sheaf O
  std::optional<Linearisation> lin;

  friend BundleExpr operator*(const BundleExpr& f, const BundleExpr& g);
};

BundleExpr bundle_O();
BundleExpr bundle_U(int vertex);
BundleExpr bundle_Udual(int vertex);
BundleExpr bundle_L(std::vector<Rat> twist, std::string label = "");
// L(s * theta_can / r): the twist by O(sH).
BundleExpr bundle_OH(const Quiver& q, const DimVec& d, long long s);

// Dual word: U <-> Udual, L(e) -> L(-e).
BundleExpr dual(const BundleExpr& f);

// Serre partner F^dual (x) omega, with omega = L(-theta_can); pairs H^k(F)
// with H^{dim - k}(partner).
BundleExpr serre_partner(const BundleExpr& f, const Quiver& q, const DimVec& d);

long long bundle_rank(const BundleExpr& f, const DimVec& d);

std::string to_string(const BundleExpr& f);

}  // namespace qv
