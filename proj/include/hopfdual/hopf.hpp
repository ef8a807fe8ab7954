// Hopf algebras by structure constants: axiom checks, antipode inverse,
// duals, opposite and co-opposite.

#ifndef HOPFDUAL_HOPF_HPP
#define HOPFDUAL_HOPF_HPP

#include "hopfdual/algebra.hpp"

namespace hopfdual {

/// Hopf algebra H. The dual basis h*_i of H* is always the coordinate
/// functionals of the structure-constant basis.
///
/// Values may be built unvalidated; consumers run check_hopf first.
template <class K>
struct HopfAlgebra {
  Algebra<K> algebra;
  Coalgebra<K> coalgebra;
  Matrix<K> antipode;

  const FieldSpec& field() const { return algebra.field(); }
  Index dim() const { return algebra.dim(); }
  const Matrix<K>& comul() const { return coalgebra.comul; }
  const Vector<K>& counit() const { return coalgebra.counit; }
  Vector<K> unit() const { return algebra.unit(); }
  /// Delta(e_k) as a vector in H (x) H.
  Vector<K> coproduct(Index k) const { return coalgebra.comul.col(k); }
};

template <class K>
AxiomReport check_hopf(const HopfAlgebra<K>& h);

/// Exact inverse of S; throws Singular.
template <class K>
Matrix<K> antipode_inverse(const HopfAlgebra<K>& h);

/// H* on the dual basis: multiplication is the transposed comultiplication,
/// comultiplication the transposed multiplication, antipode S^T.
template <class K>
HopfAlgebra<K> dual_hopf(const HopfAlgebra<K>& h);

/// H^op with antipode S^{-1}.
template <class K>
HopfAlgebra<K> opposite(const HopfAlgebra<K>& h);

/// H^cop with antipode S^{-1}.
template <class K>
HopfAlgebra<K> coopposite(const HopfAlgebra<K>& h);

/// Entrywise equality of all structure constants.
template <class K>
bool same_structure(const HopfAlgebra<K>& a, const HopfAlgebra<K>& b);

template <class K>
bool same_structure(const Algebra<K>& a, const Algebra<K>& b);

/// Bilinear pairing <f, x> = sum f_i x_i of a functional and a vector.
template <class K>
K pair(const Vector<K>& f, const Vector<K>& x);

}  // namespace hopfdual

#endif  // HOPFDUAL_HOPF_HPP
