#include "hopfdual/homspace.hpp"

namespace hopfdual {

template <class K>
HomSpace<K>::HomSpace(Index dim_source, Index dim_target, Subspace<K> carrier)
    : dim_source_(dim_source), dim_target_(dim_target), carrier_(std::move(carrier)) {
  if (carrier_.ambient_dim() != dim_source * dim_target) throw std::invalid_argument("HomSpace: ambient mismatch");
}

template <class K>
Matrix<K> HomSpace<K>::map_of(const Vector<K>& coords) const {
  return hom_from_vector(apply(carrier_.inclusion(), coords), dim_target_, dim_source_);
}

template <class K>
std::optional<Vector<K>> HomSpace<K>::try_coordinates(const Matrix<K>& f) const {
  if (f.rows() != dim_target_ || f.cols() != dim_source_) throw std::invalid_argument("HomSpace: map shape mismatch");
  return carrier_.coordinates(hom_to_vector(f));
}

template <class K>
Vector<K> HomSpace<K>::coordinates(const Matrix<K>& f, const std::string& what) const {
  auto c = try_coordinates(f);
  if (!c) throw std::domain_error(what + ": map lies outside the hom space");
  return *c;
}

template <class K>
HomBuilder<K>& HomBuilder<K>::intertwine(const Matrix<K>& x, const Matrix<K>& y) {
  if (x.rows() != dim_source_ || y.rows() != dim_target_) throw std::invalid_argument("intertwine: shape mismatch");
  system_.add_intertwiner(x, y);
  return *this;
}

template <class K>
HomBuilder<K>& HomBuilder<K>::condition(const SandwichTerms<K>& terms) {
  system_.add_sandwich(terms, dim_source_);
  return *this;
}

template <class K>
HomBuilder<K>& require_linear(HomBuilder<K>& b, const std::vector<Matrix<K>>& on_source,
                              const std::vector<Matrix<K>>& on_target) {
  if (on_source.size() != on_target.size()) throw std::invalid_argument("require_linear: generator count mismatch");
  for (std::size_t g = 0; g < on_source.size(); ++g) b.intertwine(on_source[g], on_target[g]);
  return b;
}

template <class K>
HomBuilder<K>& require_colinear(HomBuilder<K>& b, const Matrix<K>& rho_source, const Matrix<K>& rho_target,
                                Index dim_h) {
  const Index dv = rho_source.cols();
  const Index dw = rho_target.cols();
  // (F (x) id) rho_V = sum_h J_h F rho_h, with J_h(w) = w (x) e_h and
  // rho_h the e_h-component of rho_V.
  SandwichTerms<K> terms;
  Matrix<K> id_v = Matrix<K>::Zero(dv, dv);
  for (Index i = 0; i < dv; ++i) id_v(i, i) = K(1);
  terms.emplace_back(rho_target, id_v);
  for (Index h = 0; h < dim_h; ++h) {
    Matrix<K> j = Matrix<K>::Zero(dw * dim_h, dw);
    for (Index w = 0; w < dw; ++w) j(w * dim_h + h, w) = K(-1);
    Matrix<K> rho_h(dv, dv);
    for (Index a = 0; a < dv; ++a)
      for (Index v = 0; v < dv; ++v) rho_h(a, v) = rho_source(a * dim_h + h, v);
    terms.emplace_back(std::move(j), std::move(rho_h));
  }
  return b.condition(terms);
}

template <class K>
EndRing<K> end_ring(const FieldSpec& field, const HomSpace<K>& space, Index exhaustive_limit) {
  if (space.dim_source() != space.dim_target()) throw std::invalid_argument("end_ring: not an endomorphism space");
  const Index n = space.dim_source();
  const Matrix<K> id = identity<K>(field, n);
  auto unit = space.try_coordinates(id);
  if (!unit) throw NotClosed("end_ring: identity map does not satisfy the conditions");

  // Basis maps, materialized once.
  auto maps = std::make_shared<std::vector<Matrix<K>>>();
  for (Index k = 0; k < space.dim(); ++k) maps->push_back(space.map(k));
  auto rule = [space, maps, field](const Vector<K>& x, const Vector<K>& y) {
    Matrix<K> fx = zero_matrix<K>(field, space.dim_source(), space.dim_source());
    Matrix<K> fy = fx;
    for (Index k = 0; k < x.size(); ++k)
      if (!is_zero(x(k))) fx += (*maps)[k] * x(k);
    for (Index k = 0; k < y.size(); ++k)
      if (!is_zero(y(k))) fy += (*maps)[k] * y(k);
    auto c = space.try_coordinates(multiply(fx, fy));
    if (!c) throw NotClosed("end_ring: a composition leaves the space");
    return *c;
  };
  EndRing<K> ring{space, Algebra<K>::from_rule(field, space.dim(), rule, *unit), false};
  if (space.dim() <= exhaustive_limit) {
    for (Index i = 0; i < space.dim(); ++i)
      for (Index j = 0; j < space.dim(); ++j) ring.algebra.product(i, j);
    ring.closure_exhaustive = true;
  }
  return ring;
}

#define HOPFDUAL_INSTANTIATE_HOMSPACE(K)                                                                      \
  template class HomSpace<K>;                                                                                 \
  template class HomBuilder<K>;                                                                               \
  template HomBuilder<K>& require_linear(HomBuilder<K>&, const std::vector<Matrix<K>>&,                       \
                                         const std::vector<Matrix<K>>&);                                      \
  template HomBuilder<K>& require_colinear(HomBuilder<K>&, const Matrix<K>&, const Matrix<K>&, Index);        \
  template struct EndRing<K>;                                                                                 \
  template EndRing<K> end_ring(const FieldSpec&, const HomSpace<K>&, Index);

HOPFDUAL_INSTANTIATE_HOMSPACE(Rational)
HOPFDUAL_INSTANTIATE_HOMSPACE(ModP)

}  // namespace hopfdual
