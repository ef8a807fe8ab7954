// Left and right duals of a coring, dual bases of C as a left A-module, and
// the identifications of the duals of A (x) H with smash products.

#ifndef HOPFDUAL_DUALS_HPP
#define HOPFDUAL_DUALS_HPP

#include "hopfdual/coring.hpp"

namespace hopfdual {

class NoDualBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DualSide { left, right };

/// *C = left A-linear maps C -> A with (phi * psi)(c) = psi(c_(1) phi(c_(2))),
/// or C* = right A-linear maps with (phi * psi)(c) = phi(psi(c_(1)) c_(2)).
template <class K>
struct DualRing {
  DualSide side = DualSide::left;
  HomSpace<K> carrier;  // inside Hom_k(C, A)
  Algebra<K> algebra;
  /// i(a) = eps(-) a on the left, j(a) = a eps(-) on the right; dim x dim A.
  Matrix<K> embedding;

  Index dim() const { return carrier.dim(); }
  Matrix<K> functional(const Vector<K>& coords) const { return carrier.map_of(coords); }
};

template <class K>
DualRing<K> left_dual(const Coring<K>& c);

template <class K>
DualRing<K> right_dual(const Coring<K>& c);

/// Associativity, unit = eps, embedding an injective unital ring map.
template <class K>
AxiomReport check_dual_ring(const Coring<K>& c, const DualRing<K>& d, Index exhaustive_limit = 64);

/// Moves every column of the comultiplication lift by a seeded random
/// relation of C (x)_A C and compares all basis products of both duals with
/// the unmoved ones; also checks projection o section = id on C (x)_A C.
template <class K>
AxiomReport check_lift_independence(const Coring<K>& c, std::uint64_t seed, int trials);

/// f_i in *C and c_i in C with sum_i f_i(c) c_i = c.
template <class K>
struct DualBasisPair {
  std::vector<Matrix<K>> functionals;  // dim A x dim C
  std::vector<Vector<K>> elements;
};

/// Generators of C as a left A-module are taken greedily from the basis;
/// the functionals solve the dual basis identity inside *C.
template <class K>
DualBasisPair<K> dual_basis(const Coring<K>& c, const DualRing<K>& left);

template <class K>
bool check_dual_basis(const Coring<K>& c, const DualBasisPair<K>& p);

/// The maps identifying the duals of the coring A (x) H with smash products.
/// Functionals are in carrier coordinates; #(H, A) = Hom_k(H, A) in the
/// coordinates f -> sum_i f(h_i) # h*_i, shared with A # H*.
template <class K>
struct SmashDualMaps {
  ComoduleAlgebra<K> op;  // A^op over H^op with the same coaction
  Matrix<K> gamma;        // (A (x) H)* -> #(H, A), phi -> phi(1 (x) S^-1(-))
  Matrix<K> delta;        // zeta -> (a (x) h -> zeta(a_[1] S(h)) a_[0])
  Matrix<K> gamma_prime;  // *(A (x) H) -> #(H^op, A^op)^op, phi -> phi(1 (x) -)
  Matrix<K> delta_prime;  // zeta -> (a (x) h -> a zeta(h))
  Matrix<K> twist;        // A # H* -> (A^op # H^{*cop})^op
  Matrix<K> composite;    // *(A (x) H) -> A # H*
};

template <class K>
SmashDualMaps<K> smash_dual_maps(const ComoduleAlgebra<K>& c, const DualRing<K>& left, const DualRing<K>& right);

/// Right H*-coaction a # h* -> (a # h*_(1)) (x) h*_(2) on A # H*.
template <class K>
Matrix<K> smash_coaction(const ComoduleAlgebra<K>& c);

/// *(A (x) H) as a right H*-comodule algebra, transported from A # H*
/// through `composite`.
template <class K>
ComoduleAlgebra<K> comodule_on_left_dual(const ComoduleAlgebra<K>& c, const DualRing<K>& left,
                                         const SmashDualMaps<K>& maps);

}  // namespace hopfdual

#endif  // HOPFDUAL_DUALS_HPP
