#include "hopfdual/algebra.hpp"

#include <random>
#include <sstream>

namespace hopfdual {

void AxiomReport::append(const AxiomReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
}

bool AxiomReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.name;
  return {};
}

namespace {

template <class K>
bool equal_vectors(const Vector<K>& a, const Vector<K>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

template <class K>
bool equal_matrices(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class K>
void add_scaled(Vector<K>& out, const K& f, const SparseVector<K>& v) {
  for (std::size_t t = 0; t < v.nnz(); ++t) out(v.index[t]) += f * v.value[t];
}

}  // namespace

// ------------------------------------------------------------------- Algebra

template <class K>
Algebra<K> Algebra<K>::from_products(const FieldSpec& field, Index dim, std::vector<SparseVector<K>> products,
                                     Vector<K> unit) {
  if (static_cast<Index>(products.size()) != dim * dim || unit.size() != dim) {
    throw std::invalid_argument("Algebra: structure constants do not match the dimension");
  }
  auto impl = std::make_shared<Impl>();
  impl->field = field;
  impl->dim = dim;
  impl->unit = std::move(unit);
  impl->cache.resize(products.size());
  for (std::size_t k = 0; k < products.size(); ++k) {
    impl->cache[k] = std::make_unique<SparseVector<K>>(std::move(products[k]));
  }
  Algebra a;
  a.impl_ = std::move(impl);
  return a;
}

template <class K>
Algebra<K> Algebra<K>::from_table(const FieldSpec& field, const Tensor3<K>& mul, Vector<K> unit) {
  const Index dim = static_cast<Index>(mul.size());
  std::vector<SparseVector<K>> products(static_cast<std::size_t>(dim * dim));
  for (Index i = 0; i < dim; ++i) {
    if (static_cast<Index>(mul[i].size()) != dim) throw std::invalid_argument("Algebra: ragged mul table");
    for (Index j = 0; j < dim; ++j) {
      if (static_cast<Index>(mul[i][j].size()) != dim) throw std::invalid_argument("Algebra: ragged mul table");
      for (Index k = 0; k < dim; ++k) products[i * dim + j].push(k, mul[i][j][k]);
    }
  }
  return from_products(field, dim, std::move(products), std::move(unit));
}

template <class K>
Algebra<K> Algebra<K>::from_rule(const FieldSpec& field, Index dim, Rule rule, Vector<K> unit) {
  if (unit.size() != dim) throw std::invalid_argument("Algebra: unit has the wrong length");
  auto impl = std::make_shared<Impl>();
  impl->field = field;
  impl->dim = dim;
  impl->unit = std::move(unit);
  impl->rule = std::move(rule);
  impl->cache.resize(static_cast<std::size_t>(dim * dim));
  Algebra a;
  a.impl_ = std::move(impl);
  return a;
}

template <class K>
const SparseVector<K>& Algebra<K>::product(Index i, Index j) const {
  const auto slot = static_cast<std::size_t>(i * dim() + j);
  std::lock_guard<std::mutex> lock(impl_->mutex);
  auto& entry = impl_->cache[slot];
  if (!entry) {
    entry = std::make_unique<SparseVector<K>>(SparseVector<K>::from_dense(impl_->rule(basis(i), basis(j))));
  }
  return *entry;
}

template <class K>
Vector<K> Algebra<K>::multiply(const Vector<K>& x, const Vector<K>& y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("Algebra::multiply: length mismatch");
  if (impl_->rule) return impl_->rule(x, y);
  Vector<K> out = zero_vector<K>(field(), dim());
  for (Index i = 0; i < dim(); ++i) {
    if (is_zero(x(i))) continue;
    for (Index j = 0; j < dim(); ++j) {
      if (is_zero(y(j))) continue;
      add_scaled(out, x(i) * y(j), product(i, j));
    }
  }
  return out;
}

template <class K>
Matrix<K> Algebra<K>::left_multiplication(const Vector<K>& x) const {
  Matrix<K> m(dim(), dim());
  for (Index j = 0; j < dim(); ++j) m.col(j) = multiply(x, basis(j));
  return m;
}

template <class K>
Matrix<K> Algebra<K>::right_multiplication(const Vector<K>& x) const {
  Matrix<K> m(dim(), dim());
  for (Index j = 0; j < dim(); ++j) m.col(j) = multiply(basis(j), x);
  return m;
}

template <class K>
Matrix<K> Algebra<K>::multiplication_matrix() const {
  Matrix<K> m = zero_matrix<K>(field(), dim(), dim() * dim());
  for (Index i = 0; i < dim(); ++i)
    for (Index j = 0; j < dim(); ++j) {
      const SparseVector<K>& p = product(i, j);
      for (std::size_t t = 0; t < p.nnz(); ++t) m(p.index[t], i * dim() + j) = p.value[t];
    }
  return m;
}

template <class K>
Tensor3<K> Algebra<K>::table() const {
  const K zero = make_scalar<K>(field(), 0);
  Tensor3<K> t(dim(), std::vector<std::vector<K>>(dim(), std::vector<K>(dim(), zero)));
  for (Index i = 0; i < dim(); ++i)
    for (Index j = 0; j < dim(); ++j) {
      const SparseVector<K>& p = product(i, j);
      for (std::size_t s = 0; s < p.nnz(); ++s) t[i][j][p.index[s]] = p.value[s];
    }
  return t;
}

template <class K>
Algebra<K> Algebra<K>::opposite() const {
  if (impl_->rule) {
    Rule r = impl_->rule;
    return from_rule(field(), dim(), [r](const Vector<K>& x, const Vector<K>& y) { return r(y, x); }, unit());
  }
  std::vector<SparseVector<K>> products(static_cast<std::size_t>(dim() * dim()));
  for (Index i = 0; i < dim(); ++i)
    for (Index j = 0; j < dim(); ++j) products[i * dim() + j] = product(j, i);
  return from_products(field(), dim(), std::move(products), unit());
}

// ----------------------------------------------------------------- Coalgebra

template <class K>
Coalgebra<K> Coalgebra<K>::from_table(const FieldSpec& field, const Tensor3<K>& comul, Vector<K> counit) {
  const Index dim = static_cast<Index>(comul.size());
  if (counit.size() != dim) throw std::invalid_argument("Coalgebra: counit has the wrong length");
  Matrix<K> d = zero_matrix<K>(field, dim * dim, dim);
  for (Index k = 0; k < dim; ++k) {
    if (static_cast<Index>(comul[k].size()) != dim) throw std::invalid_argument("Coalgebra: ragged comul table");
    for (Index i = 0; i < dim; ++i) {
      if (static_cast<Index>(comul[k][i].size()) != dim) throw std::invalid_argument("Coalgebra: ragged comul table");
      for (Index j = 0; j < dim; ++j) d(i * dim + j, k) = comul[k][i][j];
    }
  }
  return {field, dim, std::move(d), std::move(counit)};
}

template <class K>
Tensor3<K> Coalgebra<K>::table() const {
  Tensor3<K> t(dim, std::vector<std::vector<K>>(dim, std::vector<K>(dim)));
  for (Index k = 0; k < dim; ++k)
    for (Index i = 0; i < dim; ++i)
      for (Index j = 0; j < dim; ++j) t[k][i][j] = comul(i * dim + j, k);
  return t;
}

template <class K>
Coalgebra<K> Coalgebra<K>::coopposite() const {
  return {field, dim, multiply(swap_matrix<K>(field, dim, dim), comul), counit};
}

// -------------------------------------------------------------------- checks

template <class K>
AxiomReport check_algebra(const Algebra<K>& a, Index exhaustive_limit, int samples) {
  AxiomReport report;
  const Index n = a.dim();
  const Vector<K>& one = a.unit();

  auto assoc_fails = [&](Index i, Index j, Index k) {
    const SparseVector<K>& ij = a.product(i, j);
    const SparseVector<K>& jk = a.product(j, k);
    Vector<K> left = zero_vector<K>(a.field(), n), right = zero_vector<K>(a.field(), n);
    for (std::size_t t = 0; t < ij.nnz(); ++t) add_scaled(left, ij.value[t], a.product(ij.index[t], k));
    for (std::size_t t = 0; t < jk.nnz(); ++t) add_scaled(right, jk.value[t], a.product(i, jk.index[t]));
    return !equal_vectors(left, right);
  };

  std::string witness;
  if (n <= exhaustive_limit) {
    for (Index i = 0; i < n && witness.empty(); ++i)
      for (Index j = 0; j < n && witness.empty(); ++j)
        for (Index k = 0; k < n && witness.empty(); ++k)
          if (assoc_fails(i, j, k)) {
            witness = "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" + std::to_string(k);
          }
    report.add("associativity", witness.empty(), witness.empty() ? "all basis triples" : witness);
  } else {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<Index> pick(0, n - 1);
    for (int s = 0; s < samples && witness.empty(); ++s) {
      const Index i = pick(rng), j = pick(rng), k = pick(rng);
      if (assoc_fails(i, j, k)) witness = "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" + std::to_string(k);
    }
    report.add("associativity", witness.empty(),
               witness.empty() ? std::to_string(samples) + " sampled basis triples" : witness);
  }

  bool left_unit = true, right_unit = true;
  for (Index i = 0; i < n; ++i) {
    const Vector<K> e = a.basis(i);
    if (!equal_vectors(a.multiply(one, e), e)) left_unit = false;
    if (!equal_vectors(a.multiply(e, one), e)) right_unit = false;
  }
  report.add("left unit", left_unit);
  report.add("right unit", right_unit);
  return report;
}

template <class K>
AxiomReport check_coalgebra(const Coalgebra<K>& c) {
  AxiomReport report;
  const Matrix<K> id = identity<K>(c.field, c.dim);
  const Matrix<K> d = c.comul;
  report.add("coassociativity", equal_matrices(multiply(kron(d, id), d), multiply(kron(id, d), d)));
  report.add("left counit", equal_matrices(multiply(kron(c.counit_row(), id), d), id));
  report.add("right counit", equal_matrices(multiply(kron(id, c.counit_row()), d), id));
  return report;
}

namespace {

// Span of 1 and all words in the chosen generators, closed under right
// multiplication by them.
template <class K>
RowEchelon<K> word_closure(const Algebra<K>& a, const std::vector<Index>& gens) {
  RowEchelon<K> span(a.dim());
  std::vector<Vector<K>> queue{a.unit()};
  span.add(a.unit());
  for (std::size_t q = 0; q < queue.size() && !span.full(); ++q) {
    for (Index g : gens) {
      Vector<K> w = a.multiply(queue[q], a.basis(g));
      if (span.add(w)) queue.push_back(std::move(w));
      if (span.full()) break;
    }
  }
  return span;
}

}  // namespace

template <class K>
GeneratingSet<K> algebra_generators(const Algebra<K>& a) {
  GeneratingSet<K> out;
  RowEchelon<K> span = word_closure(a, out.indices);
  for (Index i = 0; i < a.dim() && !span.full(); ++i) {
    if (span.contains(a.basis(i))) continue;
    out.indices.push_back(i);
    span = word_closure(a, out.indices);
  }
  out.spans = span.full();
  return out;
}

template <class K>
Algebra<K> tensor_algebra(const Algebra<K>& a, const Algebra<K>& b) {
  const Index na = a.dim(), nb = b.dim();
  std::vector<SparseVector<K>> products(static_cast<std::size_t>(na * nb * na * nb));
  for (Index i = 0; i < na; ++i)
    for (Index p = 0; p < nb; ++p)
      for (Index j = 0; j < na; ++j)
        for (Index q = 0; q < nb; ++q) {
          const SparseVector<K>& x = a.product(i, j);
          const SparseVector<K>& y = b.product(p, q);
          SparseVector<K>& out = products[(i * nb + p) * na * nb + (j * nb + q)];
          for (std::size_t s = 0; s < x.nnz(); ++s)
            for (std::size_t t = 0; t < y.nnz(); ++t) out.push(x.index[s] * nb + y.index[t], x.value[s] * y.value[t]);
        }
  return Algebra<K>::from_products(a.field(), na * nb, std::move(products), kron(a.unit(), b.unit()));
}

template <class K>
Matrix<K> swap_matrix(const FieldSpec& field, Index dim_v, Index dim_w) {
  Matrix<K> s = zero_matrix<K>(field, dim_v * dim_w, dim_v * dim_w);
  for (Index i = 0; i < dim_v; ++i)
    for (Index j = 0; j < dim_w; ++j) s(j * dim_v + i, i * dim_w + j) = make_scalar<K>(field, 1);
  return s;
}

#define HOPFDUAL_INSTANTIATE_ALGEBRA(K)                                        \
  template class Algebra<K>;                                                   \
  template struct Coalgebra<K>;                                                \
  template AxiomReport check_algebra(const Algebra<K>&, Index, int);           \
  template AxiomReport check_coalgebra(const Coalgebra<K>&);                   \
  template struct GeneratingSet<K>;                                            \
  template GeneratingSet<K> algebra_generators(const Algebra<K>&);             \
  template Algebra<K> tensor_algebra(const Algebra<K>&, const Algebra<K>&);    \
  template Matrix<K> swap_matrix<K>(const FieldSpec&, Index, Index);

HOPFDUAL_INSTANTIATE_ALGEBRA(Rational)
HOPFDUAL_INSTANTIATE_ALGEBRA(ModP)

}  // namespace hopfdual
