// Comodule algebras, relative Hopf modules, module algebras and the smash
// products built from them.
//
// For a right H-comodule algebra A the dual Hopf algebra H* acts through
// (h* <- h)(g) = h*(hg), and A#H* multiplies by
//   (a # h*)(b # g*) = a b_[0] # (h* <- b_[1]) g*.
// The same data on Hom_k(H, A) gives
//   (f . g)(h) = f(g(h_(2))_[1] h_(1)) g(h_(2))_[0],
// and f -> sum_i f(h_i) # h*_i is the identity in coordinates.

#ifndef HOPFDUAL_SMASH_HPP
#define HOPFDUAL_SMASH_HPP

#include "hopfdual/homspace.hpp"
#include "hopfdual/hopf.hpp"

namespace hopfdual {

/// Right H-comodule algebra; coaction is dim A * dim H x dim A with
/// rho(e_a) in A (x) H.
template <class K>
struct ComoduleAlgebra {
  Algebra<K> algebra;
  HopfAlgebra<K> hopf;
  Matrix<K> coaction;

  const FieldSpec& field() const { return algebra.field(); }
  Index dim_a() const { return algebra.dim(); }
  Index dim_h() const { return hopf.dim(); }
};

template <class K>
AxiomReport check_comodule_algebra(const ComoduleAlgebra<K>& c);

/// Right module over A with a compatible right H-coaction.
template <class K>
struct RelativeHopfModule {
  Index dim = 0;
  /// dim x (dim * dim A); column m * dim A + a holds m a.
  Matrix<K> right_action;
  /// (dim * dim H) x dim.
  Matrix<K> coaction;

  /// Matrix of m -> m a.
  Matrix<K> action_by(const Vector<K>& a) const;
};

template <class K>
AxiomReport check_relative_hopf_module(const ComoduleAlgebra<K>& c, const RelativeHopfModule<K>& m);

/// M = A with right multiplication and coaction rho.
template <class K>
RelativeHopfModule<K> regular_module(const ComoduleAlgebra<K>& c);

/// M = A (x) H with (a (x) h) b = a b_[0] (x) h b_[1] and coaction id (x) Delta.
template <class K>
RelativeHopfModule<K> canonical_module(const ComoduleAlgebra<K>& c);

/// Left H-module algebra; action[j] is the matrix of e_j acting on R.
template <class K>
struct ModuleAlgebra {
  Algebra<K> algebra;
  HopfAlgebra<K> hopf;
  std::vector<Matrix<K>> action;

  /// Matrix of h acting, for h given in coordinates.
  Matrix<K> acting(const Vector<K>& h) const;
};

/// Module axioms and h(rs) = (h_(1) r)(h_(2) s); exhaustive up to
/// `exhaustive_limit` dimensions of R, seeded samples beyond.
template <class K>
AxiomReport check_module_algebra(const ModuleAlgebra<K>& r, Index exhaustive_limit = 16, int samples = 512);

/// A#H* on the basis e_i # f_j (index i * dim H + j).
template <class K>
Algebra<K> smash_product(const ComoduleAlgebra<K>& c);

/// #(H, A) = Hom_k(H, A) on the hom basis.
template <class K>
Algebra<K> big_smash(const ComoduleAlgebra<K>& c);

/// Matrix of f -> sum_i f(h_i) # h*_i from #(H, A) to A#H*.
template <class K>
Matrix<K> big_to_smash_map(const ComoduleAlgebra<K>& c);

/// Left H*-action phi . m = m_[0] phi(m_[1]); entry j acts as f_j.
template <class K>
std::vector<Matrix<K>> comodule_to_module(const Matrix<K>& coaction, Index dim, Index dim_h);

/// Inverse of comodule_to_module: rho(m) = sum_j (f_j . m) (x) h_j.
template <class K>
Matrix<K> module_to_comodule(const std::vector<Matrix<K>>& action, Index dim);

/// R#H with (r # h)(s # g) = r (h_(1) . s) # h_(2) g, basis r_i # h_j.
template <class K>
Algebra<K> module_smash(const ModuleAlgebra<K>& r);

/// End_A(M) as a left H*-module algebra, (phi . f) = phi_(1) f S(phi_(2)),
/// where H* acts on M through the coaction.
template <class K>
struct EndModuleAlgebra {
  HopfAlgebra<K> acting;             // H*
  std::vector<Matrix<K>> m_action;   // H* on M
  EndRing<K> end;                    // End_A(M)
  ModuleAlgebra<K> module_algebra;   // End_A(M) with the H*-action
};

template <class K>
EndModuleAlgebra<K> end_module_algebra(const ComoduleAlgebra<K>& c, const RelativeHopfModule<K>& m);

/// Right A-linear endomorphisms of M.
template <class K>
HomSpace<K> right_linear_endomorphisms(const ComoduleAlgebra<K>& c, const RelativeHopfModule<K>& m);

}  // namespace hopfdual

#endif  // HOPFDUAL_SMASH_HPP
