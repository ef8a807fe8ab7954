// Corings over a finite-dimensional algebra A: bimodules, tensor products
// over A, the A (x) H coring of a comodule algebra, canonical corings,
// coinvariants and the Galois condition.

#ifndef HOPFDUAL_CORING_HPP
#define HOPFDUAL_CORING_HPP

#include <string>

#include "hopfdual/smash.hpp"

namespace hopfdual {

class NotASubring : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IllDefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A-bimodule. left_action has column a * dim + m, right_action m * dim A + a.
template <class K>
struct Bimodule {
  Index dim = 0;
  Index dim_a = 0;
  Matrix<K> left_action;
  Matrix<K> right_action;

  Matrix<K> left_by(const Vector<K>& a) const;
  Matrix<K> right_by(const Vector<K>& a) const;
};

template <class K>
AxiomReport check_bimodule(const Algebra<K>& a, const Bimodule<K>& m);

/// Matrix of m -> m a from a right action laid out as column m * dim A + a.
template <class K>
Matrix<K> right_action_by(const Matrix<K>& right_action, Index dim, const Vector<K>& a);

/// Matrix of n -> a n from a left action laid out as column a * dim + n.
template <class K>
Matrix<K> left_action_by(const Matrix<K>& left_action, Index dim, const Vector<K>& a);

/// M (x)_A N as the quotient of M (x)_k N by the span of m a (x) n - m (x) a n.
/// The acting elements are given by their matrices on M (right) and N
/// (left); a generating set of A yields the same span as all of A.
template <class K>
QuotientSpace<K> tensor_over(const std::vector<Matrix<K>>& right_on_m, const std::vector<Matrix<K>>& left_on_n);

/// tensor_over with the acting elements a generating set of the algebra.
template <class K>
QuotientSpace<K> tensor_over(const Algebra<K>& a, const Matrix<K>& right_action_m, Index dim_m,
                             const Matrix<K>& left_action_n, Index dim_n);

template <class K>
struct Coring {
  Algebra<K> base;
  Bimodule<K> bimodule;
  /// C (x)_A C inside C (x)_k C.
  QuotientSpace<K> caa;
  /// A lift of Delta into C (x)_k C (dim^2 x dim).
  Matrix<K> comul_lift;
  /// dim A x dim.
  Matrix<K> counit;

  Index dim() const { return bimodule.dim; }
  const FieldSpec& field() const { return base.field(); }
  /// Delta in the coordinates of the stored quotient.
  Matrix<K> comul() const { return multiply(caa.projection(), comul_lift); }
};

template <class K>
Coring<K> make_coring(const Algebra<K>& base, Bimodule<K> bimodule, Matrix<K> comul_lift, Matrix<K> counit);

template <class K>
struct GrouplikeCoring {
  Coring<K> coring;
  Vector<K> x;
};

/// Bimodule-map property of Delta and eps, coassociativity in
/// C (x)_A C (x)_A C and both counit laws.
template <class K>
AxiomReport check_coring(const Coring<K>& c);

template <class K>
AxiomReport check_grouplike(const GrouplikeCoring<K>& g);

/// The coring A (x) H with grouplike 1 (x) 1.
template <class K>
GrouplikeCoring<K> coring_from_comodule(const ComoduleAlgebra<K>& c);

/// A (x)_B A for B given by the columns of `subring` (the image of a ring
/// map into A); throws NotASubring when the span is not a unital subalgebra.
template <class K>
GrouplikeCoring<K> canonical_coring(const Algebra<K>& a, const Matrix<K>& subring);

/// A viewed as an A-coring with Delta(a) = a (x) 1 and eps = id.
template <class K>
GrouplikeCoring<K> trivial_coring(const Algebra<K>& a);

/// A coalgebra viewed as a coring over the ground field.
template <class K>
Coring<K> coring_from_coalgebra(const Coalgebra<K>& c);

/// {a in A : a x = x a}.
template <class K>
Subspace<K> coinvariants(const GrouplikeCoring<K>& g);

/// {a in A : rho(a) = a (x) 1}.
template <class K>
Subspace<K> comodule_coinvariants(const ComoduleAlgebra<K>& c);

/// Whether the span of the columns is a unital subalgebra.
template <class K>
bool is_subalgebra(const Algebra<K>& a, const Subspace<K>& b);

template <class K>
struct CanMap {
  QuotientSpace<K> source;  // A (x)_B A
  Matrix<K> map;            // into C
};

/// a (x) b -> a x b on A (x)_B A; throws IllDefined when a relation has a
/// nonzero image.
template <class K>
CanMap<K> can_map(const GrouplikeCoring<K>& g, const Subspace<K>& b);

struct GaloisEvidence {
  bool galois = false;
  Index dim_coinvariants = 0;
  Index dim_source = 0;  // dim A (x)_B A
  Index dim_target = 0;  // dim C
  Index rank = 0;
  std::string detail;
};

template <class K>
GaloisEvidence is_galois(const GrouplikeCoring<K>& g);

/// Builds A (x)_B A and A (x) H with B = A^{coH} and checks whether
/// a (x) b -> a b_[0] (x) b_[1] is a coring isomorphism.
template <class K>
GaloisEvidence hopf_galois_check(const ComoduleAlgebra<K>& c);

/// Right action on M (x)_A N induced by a right action on N.
template <class K>
Matrix<K> induced_right_action(const QuotientSpace<K>& q, Index dim_m, const Matrix<K>& right_action_n, Index dim_n,
                               Index dim_a);

}  // namespace hopfdual

#endif  // HOPFDUAL_CORING_HPP
