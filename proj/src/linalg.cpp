#include "hopfdual/linalg.hpp"

#include <algorithm>

namespace hopfdual {

template <class K>
K SparseVector<K>::at(Index i) const {
  auto it = std::lower_bound(index.begin(), index.end(), i);
  if (it == index.end() || *it != i) return K(0);
  return value[static_cast<std::size_t>(it - index.begin())];
}

template <class K>
Vector<K> SparseVector<K>::to_dense(Index size) const {
  Vector<K> v = Vector<K>::Zero(size);
  for (std::size_t k = 0; k < index.size(); ++k) v(index[k]) = value[k];
  return v;
}

template <class K>
SparseVector<K> SparseVector<K>::from_dense(const Vector<K>& v) {
  SparseVector<K> s;
  for (Index i = 0; i < v.size(); ++i) s.push(i, v(i));
  return s;
}

template <class K>
Matrix<K> multiply(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  Matrix<K> c = Matrix<K>::Zero(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k) {
    std::vector<Index> nz;
    for (Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, k))) nz.push_back(i);
    if (nz.empty()) continue;
    for (Index j = 0; j < b.cols(); ++j) {
      const K& bkj = b(k, j);
      if (is_zero(bkj)) continue;
      for (Index i : nz) c(i, j) += a(i, k) * bkj;
    }
  }
  return c;
}

template <class K>
Vector<K> apply(const Matrix<K>& a, const Vector<K>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("apply: dimension mismatch");
  Vector<K> y = Vector<K>::Zero(a.rows());
  for (Index k = 0; k < a.cols(); ++k) {
    const K& xk = x(k);
    if (is_zero(xk)) continue;
    for (Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, k))) y(i) += a(i, k) * xk;
  }
  return y;
}

template <class K>
Vector<K> unit_vector(const FieldSpec& field, Index size, Index i) {
  Vector<K> v = zero_vector<K>(field, size);
  v(i) = make_scalar<K>(field, 1);
  return v;
}

template <class K>
Matrix<K> identity(const FieldSpec& field, Index n) {
  Matrix<K> m = zero_matrix<K>(field, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = make_scalar<K>(field, 1);
  return m;
}

template <class K>
Matrix<K> zero_matrix(const FieldSpec& field, Index rows, Index cols) {
  return Matrix<K>::Constant(rows, cols, make_scalar<K>(field, 0));
}

template <class K>
Vector<K> zero_vector(const FieldSpec& field, Index size) {
  return Vector<K>::Constant(size, make_scalar<K>(field, 0));
}

template <class K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> out = Matrix<K>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      const K& aij = a(i, j);
      if (is_zero(aij)) continue;
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          if (!is_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

template <class K>
Vector<K> kron(const Vector<K>& a, const Vector<K>& b) {
  Vector<K> out = Vector<K>::Zero(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    if (is_zero(a(i))) continue;
    for (Index j = 0; j < b.size(); ++j)
      if (!is_zero(b(j))) out(i * b.size() + j) = a(i) * b(j);
  }
  return out;
}

template <class K>
Vector<K> hom_to_vector(const Matrix<K>& map) {
  Vector<K> v(map.rows() * map.cols());
  for (Index i = 0; i < map.rows(); ++i)
    for (Index j = 0; j < map.cols(); ++j) v(i * map.cols() + j) = map(i, j);
  return v;
}

template <class K>
Matrix<K> hom_from_vector(const Vector<K>& v, Index dim_target, Index dim_source) {
  if (v.size() != dim_target * dim_source) throw std::invalid_argument("hom_from_vector: size mismatch");
  Matrix<K> m(dim_target, dim_source);
  for (Index i = 0; i < dim_target; ++i)
    for (Index j = 0; j < dim_source; ++j) m(i, j) = v(i * dim_source + j);
  return m;
}

// ---------------------------------------------------------------- RowEchelon

namespace {

// out = a - f * b over sorted sparse vectors.
template <class K>
SparseVector<K> axpy_sparse(const SparseVector<K>& a, const K& f, const SparseVector<K>& b) {
  SparseVector<K> out;
  out.index.reserve(a.nnz() + b.nnz());
  out.value.reserve(a.nnz() + b.nnz());
  std::size_t i = 0, j = 0;
  while (i < a.nnz() || j < b.nnz()) {
    if (j == b.nnz() || (i < a.nnz() && a.index[i] < b.index[j])) {
      out.index.push_back(a.index[i]);
      out.value.push_back(a.value[i]);
      ++i;
    } else if (i == a.nnz() || b.index[j] < a.index[i]) {
      out.push(b.index[j], -(f * b.value[j]));
      ++j;
    } else {
      out.push(a.index[i], a.value[i] - f * b.value[j]);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

template <class K>
RowEchelon<K>::RowEchelon(Index cols)
    : cols_(cols), pivot_row_(static_cast<std::size_t>(cols), -1), work_(static_cast<std::size_t>(cols)),
      touched_(static_cast<std::size_t>(cols), 0) {}

template <class K>
bool RowEchelon<K>::add(const SparseVector<K>& row) {
  if (full() || row.empty()) return false;
  std::vector<Index> touched;
  auto touch = [&](Index c) {
    if (!touched_[c]) {
      touched_[c] = 1;
      touched.push_back(c);
      work_[c] = K(0);
    }
  };
  for (std::size_t k = 0; k < row.nnz(); ++k) {
    if (row.index[k] < 0 || row.index[k] >= cols_) throw std::out_of_range("RowEchelon::add: column out of range");
    touch(row.index[k]);
    work_[row.index[k]] += row.value[k];
  }
  // Pivot rows vanish on every other pivot column, so one pass over the
  // original support suffices.
  for (Index c : row.index) {
    const Index r = pivot_row_[c];
    if (r < 0 || is_zero(work_[c])) continue;
    const K f = work_[c];
    const SparseVector<K>& pr = rows_[r];
    for (std::size_t k = 0; k < pr.nnz(); ++k) {
      touch(pr.index[k]);
      work_[pr.index[k]] -= f * pr.value[k];
    }
  }
  std::sort(touched.begin(), touched.end());
  SparseVector<K> reduced;
  for (Index c : touched) {
    reduced.push(c, work_[c]);
    touched_[c] = 0;
  }
  if (reduced.empty()) return false;

  const Index pivot = reduced.index.front();
  const K inv = reduced.value.front().inverse();
  for (auto& v : reduced.value) v *= inv;

  for (auto& r : rows_) {
    const K f = r.at(pivot);
    if (!is_zero(f)) r = axpy_sparse(r, f, reduced);
  }
  pivot_row_[pivot] = static_cast<Index>(rows_.size());
  rows_.push_back(std::move(reduced));
  return true;
}

template <class K>
bool RowEchelon<K>::contains(const Vector<K>& row) const {
  if (row.size() != cols_) throw std::invalid_argument("RowEchelon::contains: length mismatch");
  Vector<K> w = row;
  for (Index c = 0; c < cols_; ++c) {
    if (is_zero(w(c))) continue;
    const Index r = pivot_row_[c];
    if (r < 0) return false;
    const K f = w(c);
    const SparseVector<K>& pr = rows_[r];
    for (std::size_t k = 0; k < pr.nnz(); ++k) w(pr.index[k]) -= f * pr.value[k];
  }
  return true;
}

template <class K>
std::vector<Index> RowEchelon<K>::pivot_columns() const {
  std::vector<Index> out;
  for (Index c = 0; c < cols_; ++c)
    if (pivot_row_[c] >= 0) out.push_back(c);
  return out;
}

template <class K>
std::vector<Index> RowEchelon<K>::free_columns() const {
  std::vector<Index> out;
  for (Index c = 0; c < cols_; ++c)
    if (pivot_row_[c] < 0) out.push_back(c);
  return out;
}

// ------------------------------------------------------------------ Subspace

template <class K>
Subspace<K>::Subspace(Matrix<K> inclusion, std::vector<Index> coordinate_rows)
    : inclusion_(std::move(inclusion)), coord_rows_(std::move(coordinate_rows)) {
  if (static_cast<Index>(coord_rows_.size()) != inclusion_.cols()) {
    throw std::invalid_argument("Subspace: one coordinate row per basis vector required");
  }
}

template <class K>
std::optional<Vector<K>> Subspace<K>::coordinates(const Vector<K>& v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("Subspace::coordinates: size mismatch");
  Vector<K> c(dim());
  for (Index k = 0; k < dim(); ++k) c(k) = v(coord_rows_[static_cast<std::size_t>(k)]);
  Vector<K> back = apply(inclusion_, c);
  for (Index i = 0; i < v.size(); ++i)
    if (!(back(i) == v(i))) return std::nullopt;
  return c;
}

template <class K>
Matrix<K> Subspace<K>::coordinates_of_columns(const Matrix<K>& m, const std::string& what) const {
  Matrix<K> out(dim(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    auto c = coordinates(m.col(j));
    if (!c) throw std::domain_error(what + ": column " + std::to_string(j) + " leaves the subspace");
    out.col(j) = *c;
  }
  return out;
}

// ------------------------------------------------------------- QuotientSpace

template <class K>
QuotientSpace<K>::QuotientSpace(Matrix<K> projection, Matrix<K> section)
    : projection_(std::move(projection)), section_(std::move(section)) {}

template <class K>
Vector<K> QuotientSpace<K>::random_relation(const FieldSpec& field, std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> dist(-3, 3);
  Vector<K> v(ambient_dim());
  for (Index i = 0; i < v.size(); ++i) v(i) = make_scalar<K>(field, dist(rng));
  return v - lift(project(v));
}

template <class K>
bool QuotientSpace<K>::section_is_right_inverse() const {
  const Matrix<K> ps = multiply(projection_, section_);
  for (Index i = 0; i < ps.rows(); ++i)
    for (Index j = 0; j < ps.cols(); ++j)
      if (!(ps(i, j) == K(i == j ? 1 : 0))) return false;
  return true;
}

// ----------------------------------------------------------- ConditionSystem

template <class K>
void ConditionSystem<K>::add_intertwiner(const Matrix<K>& x, const Matrix<K>& y) {
  const Index dv = x.rows();
  const Index dw = y.rows();
  if (x.cols() != dv || y.cols() != dw || dv * dw != ambient_dim()) {
    throw std::invalid_argument("add_intertwiner: dimension mismatch");
  }
  // (F X)_{ij} - (Y F)_{ij} = sum_k F_{ik} X_{kj} - sum_k Y_{ik} F_{kj}
  for (Index i = 0; i < dw; ++i) {
    for (Index j = 0; j < dv; ++j) {
      std::vector<std::pair<Index, K>> entries;
      for (Index k = 0; k < dv; ++k)
        if (!is_zero(x(k, j))) entries.emplace_back(i * dv + k, x(k, j));
      for (Index k = 0; k < dw; ++k)
        if (!is_zero(y(i, k))) entries.emplace_back(k * dv + j, -y(i, k));
      std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseVector<K> row;
      for (std::size_t t = 0; t < entries.size();) {
        std::size_t u = t;
        K sum = entries[t].second;
        while (++u < entries.size() && entries[u].first == entries[t].first) sum += entries[u].second;
        row.push(entries[t].first, sum);
        t = u;
      }
      echelon_.add(row);
      if (echelon_.full()) return;
    }
  }
}

template <class K>
void ConditionSystem<K>::add_sandwich(const std::vector<std::pair<Matrix<K>, Matrix<K>>>& terms, Index dim_source) {
  if (terms.empty() || dim_source <= 0 || ambient_dim() % dim_source != 0) {
    throw std::invalid_argument("add_sandwich: bad shape");
  }
  const Index dim_target = ambient_dim() / dim_source;
  const Index p = terms.front().first.rows();
  const Index q = terms.front().second.cols();
  for (const auto& [l, r] : terms) {
    if (l.rows() != p || r.cols() != q || l.cols() != dim_target || r.rows() != dim_source) {
      throw std::invalid_argument("add_sandwich: term shape mismatch");
    }
  }
  // Sparse views: nonzeros of each column of R and each row of L.
  struct Entry {
    Index index;
    K value;
  };
  std::vector<std::vector<std::vector<Entry>>> l_rows(terms.size()), r_cols(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& [l, r] = terms[t];
    l_rows[t].resize(static_cast<std::size_t>(p));
    for (Index i = 0; i < p; ++i)
      for (Index a = 0; a < dim_target; ++a)
        if (!is_zero(l(i, a))) l_rows[t][i].push_back({a, l(i, a)});
    r_cols[t].resize(static_cast<std::size_t>(q));
    for (Index j = 0; j < q; ++j)
      for (Index b = 0; b < dim_source; ++b)
        if (!is_zero(r(b, j))) r_cols[t][j].push_back({b, r(b, j)});
  }
  std::vector<K> buffer(static_cast<std::size_t>(ambient_dim()));
  std::vector<char> used(static_cast<std::size_t>(ambient_dim()), 0);
  std::vector<Index> touched;
  for (Index i = 0; i < p && !saturated(); ++i) {
    for (Index j = 0; j < q && !saturated(); ++j) {
      touched.clear();
      for (std::size_t t = 0; t < terms.size(); ++t)
        for (const Entry& la : l_rows[t][i])
          for (const Entry& rb : r_cols[t][j]) {
            const Index c = la.index * dim_source + rb.index;
            if (!used[c]) {
              used[c] = 1;
              buffer[c] = K(0);
              touched.push_back(c);
            }
            buffer[c] += la.value * rb.value;
          }
      std::sort(touched.begin(), touched.end());
      SparseVector<K> row;
      for (Index c : touched) {
        row.push(c, buffer[c]);
        used[c] = 0;
      }
      echelon_.add(row);
    }
  }
}

namespace {

template <class K>
Subspace<K> kernel_from_echelon(const RowEchelon<K>& e) {
  const std::vector<Index> free = e.free_columns();
  std::vector<Index> position(static_cast<std::size_t>(e.cols()), -1);
  for (std::size_t k = 0; k < free.size(); ++k) position[free[k]] = static_cast<Index>(k);
  Matrix<K> incl = Matrix<K>::Zero(e.cols(), static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) incl(free[k], static_cast<Index>(k)) = K(1);
  for (Index p : e.pivot_columns()) {
    const SparseVector<K>& row = e.pivot_row(p);
    for (std::size_t t = 0; t < row.nnz(); ++t) {
      const Index c = row.index[t];
      if (c == p) continue;
      incl(p, position[c]) = -row.value[t];
    }
  }
  return Subspace<K>(std::move(incl), free);
}

}  // namespace

template <class K>
Subspace<K> ConditionSystem<K>::solution() const {
  return kernel_from_echelon(echelon_);
}

// ------------------------------------------------------------ free functions

template <class K>
Index rank(const Matrix<K>& m) {
  RowEchelon<K> e(m.cols());
  for (Index i = 0; i < m.rows() && !e.full(); ++i) e.add(Vector<K>(m.row(i).transpose()));
  return e.rank();
}

template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const Index n = a.cols();
  RowEchelon<K> e(n + b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    Vector<K> row(n + b.cols());
    row.head(n) = a.row(i).transpose();
    row.tail(b.cols()) = b.row(i).transpose();
    e.add(row);
  }
  Matrix<K> x = Matrix<K>::Zero(n, b.cols());
  for (Index p : e.pivot_columns()) {
    if (p >= n) return std::nullopt;
    const SparseVector<K>& row = e.pivot_row(p);
    for (std::size_t t = 0; t < row.nnz(); ++t)
      if (row.index[t] >= n) x(p, row.index[t] - n) = row.value[t];
  }
  return x;
}

template <class K>
Matrix<K> invert(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw Singular("invert: matrix is not square");
  const Index n = m.rows();
  Matrix<K> id = Matrix<K>::Zero(n, n);
  for (Index i = 0; i < n; ++i) id(i, i) = K(1);
  if (rank(m) != n) throw Singular("invert: matrix is singular");
  auto x = solve(m, id);
  if (!x) throw Singular("invert: matrix is singular");
  return *x;
}

template <class K>
Subspace<K> kernel(const Matrix<K>& m) {
  RowEchelon<K> e(m.cols());
  for (Index i = 0; i < m.rows() && !e.full(); ++i) e.add(Vector<K>(m.row(i).transpose()));
  return kernel_from_echelon(e);
}

template <class K>
Subspace<K> column_span(const Matrix<K>& columns) {
  RowEchelon<K> e(columns.rows());
  for (Index j = 0; j < columns.cols() && !e.full(); ++j) e.add(Vector<K>(columns.col(j)));
  const std::vector<Index> pivots = e.pivot_columns();
  Matrix<K> incl = Matrix<K>::Zero(columns.rows(), static_cast<Index>(pivots.size()));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const SparseVector<K>& row = e.pivot_row(pivots[k]);
    for (std::size_t t = 0; t < row.nnz(); ++t) incl(row.index[t], static_cast<Index>(k)) = row.value[t];
  }
  return Subspace<K>(std::move(incl), pivots);
}

template <class K>
QuotientSpace<K> quotient_from_echelon(const RowEchelon<K>& e) {
  const std::vector<Index> free = e.free_columns();
  const Index ambient = e.cols();
  const Index dim = static_cast<Index>(free.size());
  std::vector<Index> position(static_cast<std::size_t>(ambient), -1);
  for (std::size_t k = 0; k < free.size(); ++k) position[free[k]] = static_cast<Index>(k);
  Matrix<K> proj = Matrix<K>::Zero(dim, ambient);
  Matrix<K> sect = Matrix<K>::Zero(ambient, dim);
  for (std::size_t k = 0; k < free.size(); ++k) {
    proj(static_cast<Index>(k), free[k]) = K(1);
    sect(free[k], static_cast<Index>(k)) = K(1);
  }
  // v == v - sum_p v_p r_p modulo relations; the right side lives on free columns.
  for (Index p : e.pivot_columns()) {
    const SparseVector<K>& row = e.pivot_row(p);
    for (std::size_t t = 0; t < row.nnz(); ++t) {
      if (row.index[t] == p) continue;
      proj(position[row.index[t]], p) = -row.value[t];
    }
  }
  return QuotientSpace<K>(std::move(proj), std::move(sect));
}

template <class K>
QuotientSpace<K> quotient_by(Index ambient_dim, const std::vector<Vector<K>>& relations) {
  RowEchelon<K> e(ambient_dim);
  for (const auto& r : relations) {
    if (r.size() != ambient_dim) throw std::invalid_argument("quotient_by: relation length mismatch");
    e.add(r);
  }
  return quotient_from_echelon(e);
}

template <class K>
Subspace<K> solve_conditions(Index ambient_dim, const std::vector<Vector<K>>& conditions) {
  ConditionSystem<K> sys(ambient_dim);
  for (const auto& c : conditions) {
    if (c.size() != ambient_dim) throw std::invalid_argument("solve_conditions: condition length mismatch");
    sys.add(c);
  }
  return sys.solution();
}

template <class K>
Matrix<K> kron_apply(const Matrix<K>& a, const Matrix<K>& b, const Matrix<K>& m) {
  if (m.rows() != a.cols() * b.cols()) throw std::invalid_argument("kron_apply: dimension mismatch");
  const Index ra = a.rows(), rb = b.rows(), ca = a.cols(), cb = b.cols();
  const Matrix<K> bt = b.transpose();
  Matrix<K> out(ra * rb, m.cols());
  Matrix<K> v(ca, cb);
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index i = 0; i < ca; ++i)
      for (Index j = 0; j < cb; ++j) v(i, j) = m(i * cb + j, c);
    const Matrix<K> w = multiply(multiply(a, v), bt);
    for (Index i = 0; i < ra; ++i)
      for (Index j = 0; j < rb; ++j) out(i * rb + j, c) = w(i, j);
  }
  return out;
}

#define HOPFDUAL_INSTANTIATE_LINALG(K)                                                    \
  template struct SparseVector<K>;                                                        \
  template class RowEchelon<K>;                                                           \
  template class Subspace<K>;                                                             \
  template class QuotientSpace<K>;                                                        \
  template class ConditionSystem<K>;                                                      \
  template Matrix<K> multiply(const Matrix<K>&, const Matrix<K>&);                        \
  template Vector<K> apply(const Matrix<K>&, const Vector<K>&);                           \
  template Vector<K> unit_vector<K>(const FieldSpec&, Index, Index);                      \
  template Matrix<K> identity<K>(const FieldSpec&, Index);                                \
  template Matrix<K> zero_matrix<K>(const FieldSpec&, Index, Index);                      \
  template Vector<K> zero_vector<K>(const FieldSpec&, Index);                             \
  template Matrix<K> kron(const Matrix<K>&, const Matrix<K>&);                            \
  template Vector<K> kron(const Vector<K>&, const Vector<K>&);                            \
  template Matrix<K> kron_apply(const Matrix<K>&, const Matrix<K>&, const Matrix<K>&);    \
  template Vector<K> hom_to_vector(const Matrix<K>&);                                     \
  template Matrix<K> hom_from_vector(const Vector<K>&, Index, Index);                     \
  template Index rank(const Matrix<K>&);                                                  \
  template Matrix<K> invert(const Matrix<K>&);                                            \
  template std::optional<Matrix<K>> solve(const Matrix<K>&, const Matrix<K>&);            \
  template Subspace<K> kernel(const Matrix<K>&);                                          \
  template Subspace<K> column_span(const Matrix<K>&);                                     \
  template QuotientSpace<K> quotient_by(Index, const std::vector<Vector<K>>&);            \
  template QuotientSpace<K> quotient_from_echelon(const RowEchelon<K>&);                  \
  template Subspace<K> solve_conditions(Index, const std::vector<Vector<K>>&);

HOPFDUAL_INSTANTIATE_LINALG(Rational)
HOPFDUAL_INSTANTIATE_LINALG(ModP)

}  // namespace hopfdual
