// Spaces of linear maps cut out by linearity conditions, and endomorphism
// rings under composition.

#ifndef HOPFDUAL_HOMSPACE_HPP
#define HOPFDUAL_HOMSPACE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfdual/algebra.hpp"

namespace hopfdual {

class NotClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A subspace of Hom_k(V, W) in the row-major hom basis.
template <class K>
class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(Index dim_source, Index dim_target, Subspace<K> carrier);

  Index dim() const { return carrier_.dim(); }
  Index dim_source() const { return dim_source_; }
  Index dim_target() const { return dim_target_; }
  const Subspace<K>& carrier() const { return carrier_; }

  /// The k-th basis map as a dim_target x dim_source matrix.
  Matrix<K> map(Index k) const { return hom_from_vector(carrier_.basis_vector(k), dim_target_, dim_source_); }
  Matrix<K> map_of(const Vector<K>& coords) const;
  std::optional<Vector<K>> try_coordinates(const Matrix<K>& f) const;
  /// Throws std::domain_error naming `what` when f is outside the space.
  Vector<K> coordinates(const Matrix<K>& f, const std::string& what) const;

 private:
  Index dim_source_ = 0;
  Index dim_target_ = 0;
  Subspace<K> carrier_;
};

template <class K>
using SandwichTerms = std::vector<std::pair<Matrix<K>, Matrix<K>>>;

/// Collects linear conditions on F in Hom_k(V, W).
template <class K>
class HomBuilder {
 public:
  HomBuilder(Index dim_source, Index dim_target)
      : dim_source_(dim_source), dim_target_(dim_target), system_(dim_source * dim_target) {}

  /// F x = y F, for x acting on V and y on W.
  HomBuilder& intertwine(const Matrix<K>& x, const Matrix<K>& y);
  /// sum_t L_t F R_t = 0.
  HomBuilder& condition(const SandwichTerms<K>& terms);
  HomSpace<K> build() const { return HomSpace<K>(dim_source_, dim_target_, system_.solution()); }

 private:
  Index dim_source_;
  Index dim_target_;
  ConditionSystem<K> system_;
};

/// Conditions making F: V -> W right linear for the given generator actions:
/// F(v a) = F(v) a.
template <class K>
HomBuilder<K>& require_linear(HomBuilder<K>& b, const std::vector<Matrix<K>>& on_source,
                              const std::vector<Matrix<K>>& on_target);

/// Conditions making F: V -> W colinear for coactions V -> V (x) H and
/// W -> W (x) H: rho_W F = (F (x) id) rho_V.
template <class K>
HomBuilder<K>& require_colinear(HomBuilder<K>& b, const Matrix<K>& rho_source, const Matrix<K>& rho_target,
                                Index dim_h);

/// Endomorphisms of V closed under composition, with (f g)(v) = f(g(v)).
template <class K>
struct EndRing {
  HomSpace<K> space;
  Algebra<K> algebra;
  /// Whether closure was checked on every basis pair (as opposed to being
  /// enforced lazily by every product).
  bool closure_exhaustive = false;
};

/// Builds the ring; throws NotClosed when the identity is missing or a basis
/// product leaves the space.
template <class K>
EndRing<K> end_ring(const FieldSpec& field, const HomSpace<K>& space, Index exhaustive_limit = 64);

}  // namespace hopfdual

#endif  // HOPFDUAL_HOMSPACE_HPP
