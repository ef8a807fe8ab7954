#include "hopfdual/hopf.hpp"

namespace hopfdual {

namespace {

template <class K>
bool equal_matrices(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace

template <class K>
K pair(const Vector<K>& f, const Vector<K>& x) {
  K s = K(0);
  for (Index i = 0; i < f.size(); ++i)
    if (!is_zero(f(i)) && !is_zero(x(i))) s += f(i) * x(i);
  return s;
}

template <class K>
AxiomReport check_hopf(const HopfAlgebra<K>& h) {
  AxiomReport report;
  const Index n = h.dim();
  const FieldSpec& f = h.field();
  if (h.coalgebra.dim != n || h.antipode.rows() != n || h.antipode.cols() != n || h.comul().rows() != n * n ||
      h.comul().cols() != n || h.counit().size() != n) {
    report.add("dimensions", false, "algebra, coalgebra and antipode disagree");
    return report;
  }
  report.append(check_algebra(h.algebra), "algebra: ");
  report.append(check_coalgebra(h.coalgebra), "coalgebra: ");

  const Matrix<K> m = h.algebra.multiplication_matrix();
  const Matrix<K>& d = h.comul();
  const Matrix<K> id = identity<K>(f, n);
  const Matrix<K> middle_swap = kron(kron(id, swap_matrix<K>(f, n, n)), id);
  report.add("comultiplication is multiplicative",
             equal_matrices(multiply(d, m), multiply(multiply(kron(m, m), middle_swap), kron(d, d))));
  report.add("comultiplication is unital", equal_matrices(Matrix<K>(apply(d, h.unit())),
                                                          Matrix<K>(kron(h.unit(), h.unit()))));
  report.add("counit is multiplicative",
             equal_matrices(multiply(h.coalgebra.counit_row(), m), kron(h.coalgebra.counit_row(), h.coalgebra.counit_row())));
  report.add("counit is unital", pair(h.counit(), h.unit()) == make_scalar<K>(f, 1));

  const Matrix<K> eta_eps = multiply(Matrix<K>(h.unit()), h.coalgebra.counit_row());
  report.add("antipode left identity", equal_matrices(multiply(multiply(m, kron(h.antipode, id)), d), eta_eps));
  report.add("antipode right identity", equal_matrices(multiply(multiply(m, kron(id, h.antipode)), d), eta_eps));
  report.add("antipode invertible", rank(h.antipode) == n);
  return report;
}

template <class K>
Matrix<K> antipode_inverse(const HopfAlgebra<K>& h) {
  return invert(h.antipode);
}

template <class K>
HopfAlgebra<K> dual_hopf(const HopfAlgebra<K>& h) {
  const Index n = h.dim();
  const FieldSpec& f = h.field();
  // (f_a f_b)(e_k) = <f_a (x) f_b, Delta e_k>
  std::vector<SparseVector<K>> products(static_cast<std::size_t>(n * n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index k = 0; k < n; ++k) products[a * n + b].push(k, h.comul()(a * n + b, k));
  Algebra<K> alg = Algebra<K>::from_products(f, n, std::move(products), h.counit());
  // Delta(f_k)(e_i (x) e_j) = f_k(e_i e_j)
  const Matrix<K> m = h.algebra.multiplication_matrix();
  Coalgebra<K> coalg{f, n, m.transpose(), h.unit()};
  return {std::move(alg), std::move(coalg), h.antipode.transpose()};
}

template <class K>
HopfAlgebra<K> opposite(const HopfAlgebra<K>& h) {
  return {h.algebra.opposite(), h.coalgebra, antipode_inverse(h)};
}

template <class K>
HopfAlgebra<K> coopposite(const HopfAlgebra<K>& h) {
  return {h.algebra, h.coalgebra.coopposite(), antipode_inverse(h)};
}

template <class K>
bool same_structure(const Algebra<K>& a, const Algebra<K>& b) {
  if (a.dim() != b.dim()) return false;
  if (!equal_matrices(Matrix<K>(a.unit()), Matrix<K>(b.unit()))) return false;
  return equal_matrices(a.multiplication_matrix(), b.multiplication_matrix());
}

template <class K>
bool same_structure(const HopfAlgebra<K>& a, const HopfAlgebra<K>& b) {
  return same_structure(a.algebra, b.algebra) && equal_matrices(a.comul(), b.comul()) &&
         equal_matrices(Matrix<K>(a.counit()), Matrix<K>(b.counit())) && equal_matrices(a.antipode, b.antipode);
}

#define HOPFDUAL_INSTANTIATE_HOPF(K)                                          \
  template K pair(const Vector<K>&, const Vector<K>&);                        \
  template AxiomReport check_hopf(const HopfAlgebra<K>&);                     \
  template Matrix<K> antipode_inverse(const HopfAlgebra<K>&);                 \
  template HopfAlgebra<K> dual_hopf(const HopfAlgebra<K>&);                   \
  template HopfAlgebra<K> opposite(const HopfAlgebra<K>&);                    \
  template HopfAlgebra<K> coopposite(const HopfAlgebra<K>&);                  \
  template bool same_structure(const Algebra<K>&, const Algebra<K>&);         \
  template bool same_structure(const HopfAlgebra<K>&, const HopfAlgebra<K>&);

HOPFDUAL_INSTANTIATE_HOPF(Rational)
HOPFDUAL_INSTANTIATE_HOPF(ModP)

}  // namespace hopfdual
