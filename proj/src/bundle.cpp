#include "qv/bundle.hpp"

#include <stdexcept>

namespace qv {

BundleExpr operator*(const BundleExpr& f, const BundleExpr& g) {
  BundleExpr r = f;
  r.atoms.insert(r.atoms.end(), g.atoms.begin(), g.atoms.end());
  if (!r.lin) r.lin = g.lin;
  else if (g.lin && *g.lin != *r.lin)
    throw std::invalid_argument("tensor factors carry different linearisations");
  return r;
}

BundleExpr bundle_O() { return BundleExpr{}; }

BundleExpr bundle_U(int vertex) {
  BundleAtom a;
  a.kind = BundleAtom::Kind::U;
  a.vertex = vertex;
  a.label = "U" + std::to_string(vertex);
  return BundleExpr{{a}, std::nullopt};
}

BundleExpr bundle_Udual(int vertex) {
  BundleAtom a;
  a.kind = BundleAtom::Kind::Udual;
  a.vertex = vertex;
  a.label = "U" + std::to_string(vertex) + "^";
  return BundleExpr{{a}, std::nullopt};
}

BundleExpr bundle_L(std::vector<Rat> twist, std::string label) {
  BundleAtom a;
  a.kind = BundleAtom::Kind::Lin;
  a.twist = std::move(twist);
  a.label = std::move(label);
  return BundleExpr{{a}, std::nullopt};
}

BundleExpr bundle_OH(const Quiver& q, const DimVec& d, long long s) {
  if (s == 0) return bundle_O();
  Stability theta = canonical_stability(q, d);
  long long r = fano_index(q, d);
  std::vector<Rat> twist;
  twist.reserve(theta.size());
  for (long long t : theta) twist.push_back(Rat(s * t, r));
  std::string label = "O(" + std::to_string(s) + "H)";
  return bundle_L(std::move(twist), std::move(label));
}

BundleExpr dual(const BundleExpr& f) {
  BundleExpr r = f;
  for (BundleAtom& a : r.atoms) {
    switch (a.kind) {
      case BundleAtom::Kind::U:
        a.kind = BundleAtom::Kind::Udual;
        a.label += "^";
        break;
      case BundleAtom::Kind::Udual:
        a.kind = BundleAtom::Kind::U;
        if (!a.label.empty() && a.label.back() == '^') a.label.pop_back();
        break;
      case BundleAtom::Kind::Lin:
        for (Rat& x : a.twist) x = -x;
        a.label = a.label.empty() ? "" : ("(" + a.label + ")^");
        break;
    }
  }
  return r;
}

BundleExpr serre_partner(const BundleExpr& f, const Quiver& q, const DimVec& d) {
  Stability theta = canonical_stability(q, d);
  std::vector<Rat> minus_theta;
  minus_theta.reserve(theta.size());
  for (long long t : theta) minus_theta.push_back(Rat(-t));
  long long r = fano_index(q, d);
  std::string label = "O(" + std::to_string(-r) + "H)";
  return dual(f) * bundle_L(std::move(minus_theta), std::move(label));
}

long long bundle_rank(const BundleExpr& f, const DimVec& d) {
  long long rank = 1;
  for (const BundleAtom& a : f.atoms)
    if (a.kind != BundleAtom::Kind::Lin) rank *= d[a.vertex - 1];
  return rank;
}

std::string to_string(const BundleExpr& f) {
  if (f.atoms.empty()) return "O";
  std::string s;
  for (size_t i = 0; i < f.atoms.size(); ++i) {
    if (i) s += " * ";
    const BundleAtom& a = f.atoms[i];
    if (!a.label.empty()) {
      s += a.label;
    } else if (a.kind == BundleAtom::Kind::Lin) {
      s += "L(";
      for (size_t j = 0; j < a.twist.size(); ++j) {
        if (j) s += ",";
        s += a.twist[j].str();
      }
      s += ")";
    } else {
      s += "U" + std::to_string(a.vertex);
      if (a.kind == BundleAtom::Kind::Udual) s += "^";
    }
  }
  return s;
}

}  // namespace qv
