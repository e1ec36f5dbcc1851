#pragma once

// Tautological presentation of the Chow ring: Chern-class generators
// xi_{i,k} modulo the antisymmetrized forbidden relations and the linear
// relation sum_i a_i xi_{i,1}. The graded quotient is computed degree by
// degree with exact rational row reduction; on top of it sit the Chern
// character, the Todd class and Hirzebruch-Riemann-Roch.

#include <map>
#include <memory>
#include <vector>

#include "qv/bundle.hpp"
#include "qv/poly.hpp"
#include "qv/quiver.hpp"

namespace qv {

class ChowClass;

class ChowPresentation {
 public:
  // `parallel` routes relation generation and row reduction through the
  // OpenMP kernels; the result is identical either way.
  ChowPresentation(const Quiver& q, const DimVec& d, const Stability& theta,
                   const Linearisation& a, bool parallel = true);

  const Quiver& quiver() const { return q_; }
  const DimVec& dims() const { return d_; }
  const Stability& stability() const { return theta_; }
  const Linearisation& linearisation() const { return a_; }
  int dim() const { return dim_; }
  const VarLayout& vars() const { return xi_; }

  std::vector<int> basis_sizes() const;
  const std::vector<Mono>& monomials(int degree) const { return monos_[degree]; }
  const std::vector<int>& basis(int degree) const { return basis_[degree]; }
  const Rat& degree_scalar() const { return degree_scalar_; }

  ChowClass zero() const;
  ChowClass one() const;
  ChowClass reduce(const RPoly& p) const;

  ChowClass chern_character(const BundleExpr& f) const;
  ChowClass canonical_class() const;   // c_1(omega) = sum_i theta_can_i xi_{i,1}
  ChowClass hyperplane_class() const;  // -(1/r) c_1(omega)
  ChowClass todd_class() const;

  // Degree of the top component, normalized so that chi(O) = 1.
  Rat integrate(const ChowClass& c) const;
  Rat intersection_number(const std::vector<ChowClass>& classes) const;
  Zint euler_characteristic(const BundleExpr& f) const;

  ChowClass multiply(const ChowClass& a, const ChowClass& b) const;

 private:
  friend class ChowClass;

  void build(bool parallel);
  ChowClass exp_class(const ChowClass& a) const;  // a with zero degree-0 part
  ChowClass ch_atom(const BundleAtom& atom) const;

  Quiver q_;
  DimVec d_;
  Stability theta_;
  Linearisation a_;
  int dim_ = 0;
  VarLayout xi_;
  std::vector<std::vector<Mono>> monos_;
  std::vector<std::map<Mono, int>> mono_index_;
  std::vector<std::vector<int>> basis_;
  std::vector<std::vector<int>> basis_pos_;  // mono idx -> basis slot or -1
  // Normal form of each monomial as coordinates over its degree's basis.
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> nf_;
  Rat degree_scalar_;
  mutable std::vector<ChowClass> todd_cache_;
};

// Element of the graded quotient: dense coordinates over the basis of each
// degree 0..dim. Immutable presentation handle, value-semantic coordinates.
class ChowClass {
 public:
  ChowClass() = default;
  explicit ChowClass(const ChowPresentation* p);

  const ChowPresentation* presentation() const { return p_; }
  bool is_zero() const;
  const Rat& coord(int degree, int slot) const { return coords_[degree][slot]; }
  Rat& coord(int degree, int slot) { return coords_[degree][slot]; }

  ChowClass component(int degree) const;  // homogeneous piece

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  ChowClass scaled(const Rat& c) const;
  friend bool operator==(const ChowClass& a, const ChowClass& b);

 private:
  friend class ChowPresentation;
  const ChowPresentation* p_ = nullptr;
  std::vector<std::vector<Rat>> coords_;
};

}  // namespace qv
