#include "hopfdual/certificate.hpp"

namespace hopfdual {

namespace {

template <class K>
bool equal_vectors(const Vector<K>& a, const Vector<K>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

template <class K>
bool same_witness(const std::optional<Witness<K>>& a, const std::optional<Witness<K>>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->i == b->i && a->j == b->j && equal_vectors(a->image_of_product, b->image_of_product) &&
         equal_vectors(a->product_of_images, b->product_of_images);
}

template <class K>
void fill_flags(RingIsoCertificate<K>& c, Index exhaustive_limit) {
  const Algebra<K>& s = c.source;
  const Algebra<K>& t = c.target;
  const Index n = s.dim();
  c.witness.reset();
  if (c.map.rows() != t.dim() || c.map.cols() != n) {
    c.rank = 0;
    c.bijective = c.unital = c.multiplicative = c.anti_multiplicative = false;
    return;
  }
  c.rank = rank(c.map);
  c.bijective = c.rank == n && n == t.dim();
  c.unital = equal_vectors(apply(c.map, s.unit()), t.unit());

  std::vector<Index> left;
  c.generator_mode = n > exhaustive_limit;
  if (c.generator_mode) {
    left = algebra_generators(s).indices;
  } else {
    for (Index i = 0; i < n; ++i) left.push_back(i);
  }
  std::vector<Vector<K>> images(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) images[i] = c.map.col(i);

  c.multiplicative = c.anti_multiplicative = true;
  for (Index i : left)
    for (Index j = 0; j < n; ++j) {
      if (!c.multiplicative && !c.anti_multiplicative) return;
      const SparseVector<K>& ij = s.product(i, j);
      Vector<K> lhs = zero_vector<K>(s.field(), t.dim());
      for (std::size_t k = 0; k < ij.nnz(); ++k) lhs += images[ij.index[k]] * ij.value[k];
      auto test = [&](bool& flag, const Vector<K>& rhs, Orientation o) {
        if (!flag || equal_vectors(lhs, rhs)) return;
        flag = false;
        if (o == c.claim && !c.witness) c.witness = Witness<K>{i, j, lhs, rhs};
      };
      if (c.multiplicative) test(c.multiplicative, t.multiply(images[i], images[j]), Orientation::multiplicative);
      if (c.anti_multiplicative) test(c.anti_multiplicative, t.multiply(images[j], images[i]), Orientation::anti);
    }
}

}  // namespace

std::string to_string(Orientation o) { return o == Orientation::multiplicative ? "multiplicative" : "anti-multiplicative"; }

template <class K>
RingIsoCertificate<K> certify_ring_map(std::string name, const Algebra<K>& source, const Algebra<K>& target,
                                       Matrix<K> map, Orientation claim, Index exhaustive_limit) {
  RingIsoCertificate<K> c;
  c.name = std::move(name);
  c.source = source;
  c.target = target;
  c.map = std::move(map);
  c.claim = claim;
  fill_flags(c, exhaustive_limit);
  return c;
}

template <class K>
bool verify_certificate(const RingIsoCertificate<K>& c, Index exhaustive_limit) {
  RingIsoCertificate<K> r = c;
  fill_flags(r, exhaustive_limit);
  return r.rank == c.rank && r.bijective == c.bijective && r.unital == c.unital && r.multiplicative == c.multiplicative &&
         r.anti_multiplicative == c.anti_multiplicative && r.generator_mode == c.generator_mode &&
         same_witness(r.witness, c.witness);
}

template <class K>
RingIsoCertificate<K> compose(const RingIsoCertificate<K>& second, const RingIsoCertificate<K>& first, std::string name,
                              Index exhaustive_limit) {
  if (first.target.dim() != second.source.dim()) throw std::invalid_argument("compose: dimension mismatch");
  const Orientation o = first.claim == second.claim ? Orientation::multiplicative : Orientation::anti;
  return certify_ring_map(std::move(name), first.source, second.target, multiply(second.map, first.map), o,
                          exhaustive_limit);
}

template <class K>
LinearIsoCertificate<K> certify_linear_iso(std::string name, std::string source_description,
                                           std::string target_description, Matrix<K> map) {
  LinearIsoCertificate<K> c;
  c.name = std::move(name);
  c.source_description = std::move(source_description);
  c.target_description = std::move(target_description);
  c.dim_source = map.cols();
  c.dim_target = map.rows();
  c.rank = rank(map);
  c.bijective = c.rank == c.dim_source && c.rank == c.dim_target;
  c.map = std::move(map);
  return c;
}

#define HOPFDUAL_INSTANTIATE_CERTIFICATE(K)                                                                  \
  template struct RingIsoCertificate<K>;                                                                     \
  template struct LinearIsoCertificate<K>;                                                                   \
  template RingIsoCertificate<K> certify_ring_map(std::string, const Algebra<K>&, const Algebra<K>&, Matrix<K>, \
                                                  Orientation, Index);                                       \
  template bool verify_certificate(const RingIsoCertificate<K>&, Index);                                     \
  template RingIsoCertificate<K> compose(const RingIsoCertificate<K>&, const RingIsoCertificate<K>&,         \
                                         std::string, Index);                                                \
  template LinearIsoCertificate<K> certify_linear_iso(std::string, std::string, std::string, Matrix<K>);

HOPFDUAL_INSTANTIATE_CERTIFICATE(Rational)
HOPFDUAL_INSTANTIATE_CERTIFICATE(ModP)

}  // namespace hopfdual
