// Exact dense linear algebra over a field K (Rational or ModP).
//
// Conventions fixed here and used by every other module:
//   * tensor factors: e_i (x) e_j in V (x) W has index i * dim(W) + j, which is
//     the Kronecker-product ordering;
//   * Hom_k(V, W): the basis map E_{ij} (e_j -> e_i) has index i * dim(V) + j,
//     i.e. a linear map is flattened row-major from its dim(W) x dim(V) matrix;
//   * elimination is left-to-right with the leftmost nonzero column as pivot,
//     so kernels, quotients and their coordinates are reproducible bit for bit.

#ifndef HOPFDUAL_LINALG_HPP
#define HOPFDUAL_LINALG_HPP

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hopfdual/scalar.hpp"

namespace hopfdual {

using Index = Eigen::Index;

template <class K>
using Matrix = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vector = Eigen::Matrix<K, Eigen::Dynamic, 1>;

class Singular : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted sparse vector; used for condition rows and structure constants.
template <class K>
struct SparseVector {
  std::vector<Index> index;
  std::vector<K> value;

  bool empty() const { return index.empty(); }
  std::size_t nnz() const { return index.size(); }
  void push(Index i, const K& v) {
    if (!is_zero(v)) {
      index.push_back(i);
      value.push_back(v);
    }
  }
  /// Entry at position i (binary search).
  K at(Index i) const;
  Vector<K> to_dense(Index size) const;
  static SparseVector from_dense(const Vector<K>& v);
};

template <class K>
bool is_zero(const Matrix<K>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class K>
bool is_zero(const Vector<K>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

/// Product that skips zero entries; the workhorse for the sparse-ish
/// matrices produced by structure constants.
template <class K>
Matrix<K> multiply(const Matrix<K>& a, const Matrix<K>& b);

template <class K>
Vector<K> apply(const Matrix<K>& a, const Vector<K>& x);

template <class K>
Vector<K> unit_vector(const FieldSpec& field, Index size, Index i);

template <class K>
Matrix<K> identity(const FieldSpec& field, Index n);

template <class K>
Matrix<K> zero_matrix(const FieldSpec& field, Index rows, Index cols);

template <class K>
Vector<K> zero_vector(const FieldSpec& field, Index size);

/// Kronecker product; index of e_i (x) e_j is i * dim(W) + j.
template <class K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b);

template <class K>
Vector<K> kron(const Vector<K>& a, const Vector<K>& b);

/// kron(a, b) * m without forming the Kronecker product.
template <class K>
Matrix<K> kron_apply(const Matrix<K>& a, const Matrix<K>& b, const Matrix<K>& m);

/// Row-major flattening of a map W <- V into Hom_k(V, W) coordinates.
template <class K>
Vector<K> hom_to_vector(const Matrix<K>& map);

template <class K>
Matrix<K> hom_from_vector(const Vector<K>& v, Index dim_target, Index dim_source);

/// Index of the basis map e_source -> e_target in Hom_k(V, W).
inline Index hom_index(Index target, Index source, Index dim_source) {
  return target * dim_source + source;
}

/// Incrementally maintained reduced row echelon form.
///
/// Rows are fed one at a time and kept fully reduced (every pivot column is
/// zero in all other rows), so a new row is reduced by one pass over its own
/// nonzero pivot entries.
template <class K>
class RowEchelon {
 public:
  explicit RowEchelon(Index cols);

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  bool full() const { return rank() == cols_; }

  /// Returns true when the row was independent of the rows seen so far.
  bool add(const SparseVector<K>& row);
  bool add(const Vector<K>& row) { return add(SparseVector<K>::from_dense(row)); }
  /// Whether the row lies in the span of the rows seen so far.
  bool contains(const Vector<K>& row) const;

  bool is_pivot(Index col) const { return pivot_row_[col] >= 0; }
  /// Pivot columns in increasing order.
  std::vector<Index> pivot_columns() const;
  /// Non-pivot columns in increasing order.
  std::vector<Index> free_columns() const;
  /// The reduced row whose leading 1 sits in `col`.
  const SparseVector<K>& pivot_row(Index col) const { return rows_[pivot_row_[col]]; }

 private:
  Index cols_;
  std::vector<SparseVector<K>> rows_;
  std::vector<Index> pivot_row_;
  std::vector<K> work_;
  std::vector<char> touched_;
};

/// A subspace of k^ambient given by a full-column-rank inclusion matrix.
///
/// Every subspace built here has a set of coordinate rows on which the
/// inclusion restricts to the identity, so coordinates are read off directly.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  Subspace(Matrix<K> inclusion, std::vector<Index> coordinate_rows);

  Index ambient_dim() const { return inclusion_.rows(); }
  Index dim() const { return inclusion_.cols(); }
  const Matrix<K>& inclusion() const { return inclusion_; }
  const std::vector<Index>& coordinate_rows() const { return coord_rows_; }
  Vector<K> basis_vector(Index k) const { return inclusion_.col(k); }

  /// Coordinates of an ambient vector, or nullopt when it is not in the span.
  std::optional<Vector<K>> coordinates(const Vector<K>& v) const;
  /// Coordinates of each column of `m`; throws std::domain_error on a column
  /// outside the span.
  Matrix<K> coordinates_of_columns(const Matrix<K>& m, const std::string& what) const;
  bool contains(const Vector<K>& v) const { return coordinates(v).has_value(); }

 private:
  Matrix<K> inclusion_;
  std::vector<Index> coord_rows_;
};

/// k^ambient modulo a span of relations, with a projection and a section.
template <class K>
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(Matrix<K> projection, Matrix<K> section);

  Index ambient_dim() const { return projection_.cols(); }
  Index dim() const { return projection_.rows(); }
  const Matrix<K>& projection() const { return projection_; }
  const Matrix<K>& section() const { return section_; }

  Vector<K> project(const Vector<K>& v) const { return apply(projection_, v); }
  Vector<K> lift(const Vector<K>& q) const { return apply(section_, q); }

  /// A random element of the relation span: v - section(projection(v)).
  Vector<K> random_relation(const FieldSpec& field, std::mt19937_64& rng) const;

  /// projection * section == identity.
  bool section_is_right_inverse() const;

 private:
  Matrix<K> projection_;
  Matrix<K> section_;
};

/// Streams linear conditions (rows) into an echelon form; the solution set
/// is the subspace annihilated by every row.
template <class K>
class ConditionSystem {
 public:
  explicit ConditionSystem(Index ambient) : echelon_(ambient) {}

  Index ambient_dim() const { return echelon_.cols(); }
  void add(const SparseVector<K>& row) { echelon_.add(row); }
  void add(const Vector<K>& row) { echelon_.add(row); }
  /// Adds the entrywise conditions of F X - Y F = 0 for F in Hom_k(V, W),
  /// X acting on V and Y on W.
  void add_intertwiner(const Matrix<K>& x, const Matrix<K>& y);
  /// Adds the entrywise conditions of sum_t L_t F R_t = 0 for F in
  /// Hom_k(V, W) with dim V = dim_source (ambient = dim_source * dim W).
  void add_sandwich(const std::vector<std::pair<Matrix<K>, Matrix<K>>>& terms, Index dim_source);
  bool saturated() const { return echelon_.full(); }
  Subspace<K> solution() const;

 private:
  RowEchelon<K> echelon_;
};

template <class K>
Index rank(const Matrix<K>& m);

/// Exact inverse; throws Singular.
template <class K>
Matrix<K> invert(const Matrix<K>& m);

/// Some x with a x = b, or nullopt when the system is inconsistent.
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b);

template <class K>
Subspace<K> kernel(const Matrix<K>& m);

/// Span of the given columns, reduced to a basis in echelon form.
template <class K>
Subspace<K> column_span(const Matrix<K>& columns);

template <class K>
QuotientSpace<K> quotient_by(Index ambient_dim, const std::vector<Vector<K>>& relations);

/// Quotient by relations fed as sparse rows (streamed, not stored).
template <class K>
QuotientSpace<K> quotient_from_echelon(const RowEchelon<K>& relations);

/// Vectors annihilated by every condition (rows of `conditions`).
template <class K>
Subspace<K> solve_conditions(Index ambient_dim, const std::vector<Vector<K>>& conditions);

}  // namespace hopfdual

#endif  // HOPFDUAL_LINALG_HPP
